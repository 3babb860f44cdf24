"""Commuting graphs of automorphism orbits on finite groups."""

from .action import ActionSpec, Automorphism, full_aut, inner_action, orbit_partition, overgroup_action
from .catalog import catalog_entry, catalog_names, paper_catalog
from .graph import build_graph, classify_shape, is_fgraph
from .group import FiniteGroup, Subgroup
from .verifier import analyze, classify_theorem_case, prop2_checklist, refute_by_aut_clique

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "Automorphism",
    "FiniteGroup",
    "Subgroup",
    "analyze",
    "build_graph",
    "catalog_entry",
    "catalog_names",
    "classify_shape",
    "classify_theorem_case",
    "full_aut",
    "inner_action",
    "is_fgraph",
    "orbit_partition",
    "overgroup_action",
    "paper_catalog",
    "prop2_checklist",
    "refute_by_aut_clique",
]
