"""Weakly closed unipotent subgroups of Chevalley groups.

Root systems, parabolic subgroups and their centralizer root sets, Chevalley
structure constants, small enumerated finite groups of Lie type, and the
dimension inequalities that follow from the classification of weakly closed
subgroups.
"""

from .rootsys import RootSystem, RootSystemError, build, get, parse_type, supported_types
from .parabolics import ParabolicDescriptor, RootSubset, all_parabolics, centralizer_roots, parabolic
from .chevalley import ChevalleyBasis, lie_centralizer_dim

__all__ = [
    "RootSystem", "RootSystemError", "build", "get", "parse_type", "supported_types",
    "ParabolicDescriptor", "RootSubset", "all_parabolics", "centralizer_roots", "parabolic",
    "ChevalleyBasis", "lie_centralizer_dim",
]
