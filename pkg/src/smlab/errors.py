"""Exception hierarchy shared by every layer."""

from __future__ import annotations


class SmlabError(Exception):
    """Base class for errors raised by smlab."""


class DomainError(SmlabError, ValueError):
    """An argument lies outside an operation's domain."""


class PoleError(DomainError):
    """Evaluation at (or numerically at) a pole of the Gamma function."""


class ConvergenceError(SmlabError, ArithmeticError):
    """A series or a quadrature failed its stopping criterion."""


class FitRejectedError(SmlabError):
    """A log-log fit whose coefficient of determination is too low to trust."""

    def __init__(self, message: str, r_squared: float) -> None:
        super().__init__(message)
        self.r_squared = r_squared
