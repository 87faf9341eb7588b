"""Enumerated finite groups of Lie type over small fields."""

from .field import GF, FieldError
from .groups import MatrixGroup, SubgroupHandle, UnsupportedGroupError, build_group, get_group
from .weak import (
    enumerate_weakly_closed,
    example1_subgroup,
    is_weakly_closed,
    is_weakly_closed_via_fixed_point,
    regular_unipotent,
    weak_closure,
)

__all__ = [
    "GF", "FieldError", "MatrixGroup", "SubgroupHandle", "UnsupportedGroupError",
    "build_group", "get_group", "enumerate_weakly_closed", "example1_subgroup",
    "is_weakly_closed", "is_weakly_closed_via_fixed_point", "regular_unipotent", "weak_closure",
]
