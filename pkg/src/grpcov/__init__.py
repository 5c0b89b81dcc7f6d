"""grpcov: finite-group engine for irredundant subgroup covering invariants."""

from .catalog import GroupSpec, build, build_group, load_corpus, parse_spec
from .groups import Group, Subgroup, are_isomorphic, direct_product, group_from_generators

__all__ = [
    "Group",
    "Subgroup",
    "GroupSpec",
    "are_isomorphic",
    "build",
    "build_group",
    "direct_product",
    "group_from_generators",
    "load_corpus",
    "parse_spec",
]

__version__ = "0.1.0"
