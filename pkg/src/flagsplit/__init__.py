"""Exact combinatorics of splitting criteria on GL partial flag varieties:
Bott cohomology, Koszul/Buchsbaum-Eisenbud rank bookkeeping, ampleness
thresholds, and the Grassmannian/flag reduction chains."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bott import (
    CohomologyResult,
    canonical_weight,
    claim2_vanishing,
    cohomology,
    h_splitting,
    has_adjacent_singleton_blocks,
    serre_check,
)
from .criteria import Scenario, SplitBundle
from .schur import pieri_col, pieri_row, ssyt_count, weyl_dimension
from .weights import FlagShape, LeviWeight

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "CohomologyResult",
    "FlagShape",
    "LeviWeight",
    "Scenario",
    "SplitBundle",
    "canonical_weight",
    "claim2_vanishing",
    "cohomology",
    "h_splitting",
    "has_adjacent_singleton_blocks",
    "pieri_col",
    "pieri_row",
    "serre_check",
    "ssyt_count",
    "weyl_dimension",
]
