"""Atlas of recorded sufficient and necessary exponent ranges."""

from .atlas import ConditionRole, ExponentAtlas, ExponentCondition, p_grid

__all__ = ["ConditionRole", "ExponentAtlas", "ExponentCondition", "p_grid"]
