"""Exact k-MinSumRadius clustering for k <= 3 via diameter-orthogonal separator sweeps."""

from .clustering import Clustering, Separator
from .errors import (
    DimensionMismatchError,
    EmptySetError,
    InvalidInputError,
    MSRError,
    PreconditionError,
    SizeGuardError,
    UnsupportedDimensionError,
)
from .geometry import Ball, antipodal, circumball, contains, meb, meb_empty
from .msr2 import solve_msr1, solve_msr2
from .msr3 import solve_msr3
from .oracle import brute_msr, check_disjoint_optimum, check_separator_lemma
from .sweep import SweepState, build_sweep, candidate_directions, split_cost

__all__ = [
    "Ball", "Clustering", "Separator", "SweepState",
    "antipodal", "build_sweep", "brute_msr", "candidate_directions", "check_disjoint_optimum",
    "check_separator_lemma", "circumball", "contains", "meb", "meb_empty", "solve_msr1",
    "solve_msr2", "solve_msr3", "split_cost",
    "DimensionMismatchError", "EmptySetError", "InvalidInputError", "MSRError",
    "PreconditionError", "SizeGuardError", "UnsupportedDimensionError",
]
__version__ = "0.1.0"
