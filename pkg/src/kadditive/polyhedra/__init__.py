"""Exact polyhedral computations at desk scale."""

from .base import EQ, GE, HPolyhedron, LinearConstraint, VPolyhedron, canonical_ray
from .compare import (
    contains,
    difference_witness,
    equal,
    intersection_image_gap,
    is_empty,
    is_subset,
    subset_witness,
    violation,
)
from .dd import enumerate_generators, hull
from .fm import (
    DEFAULT_FM_BUDGET,
    fm_eliminate,
    fm_eliminate_all,
    linear_image,
    recession_cone,
    remove_redundant,
)
from .lp import LPResult, feasible_point, linprog

__all__ = [
    "DEFAULT_FM_BUDGET",
    "EQ",
    "GE",
    "HPolyhedron",
    "LPResult",
    "LinearConstraint",
    "VPolyhedron",
    "canonical_ray",
    "contains",
    "difference_witness",
    "enumerate_generators",
    "equal",
    "feasible_point",
    "fm_eliminate",
    "fm_eliminate_all",
    "hull",
    "intersection_image_gap",
    "is_empty",
    "is_subset",
    "linear_image",
    "linprog",
    "recession_cone",
    "remove_redundant",
    "subset_witness",
    "violation",
]
