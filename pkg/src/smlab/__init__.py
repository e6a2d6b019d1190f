"""smlab — a numerical laboratory for generalized spherical maximal means."""

__version__ = "0.1.0"
