"""Exact 1- and 2-MinSumRadius.

An optimal 2-clustering is either the single enclosing ball or is split by a
hyperplane orthogonal to the diameter through one of the enclosing ball's
support points.  For each such direction every combinatorially distinct
split is scored from the sweep's prefix and suffix radii.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .clustering import Clustering, Separator, build_clustering
from .geometry import DEFAULT_SEED, as_points, meb
from .sweep import SweepState, build_sweep, candidate_directions


class BestSplit(NamedTuple):
    cost: float
    direction_index: int  # -1 when the single cluster wins
    split: int
    state: Optional[SweepState]


def best_split(pts: np.ndarray, *, seed: int = DEFAULT_SEED, method: str = "auto") -> BestSplit:
    """Optimal 2-MinSumRadius cost of a validated ``(n, d)`` array.

    Ties resolve to the lowest direction index, then the lowest split index.
    """
    if len(pts) < 2:
        return BestSplit(0.0, -1, 0, None)
    ball, support = meb(pts, seed)
    best = BestSplit(ball.radius, -1, 0, None)
    for j, u in enumerate(candidate_directions(ball, support, pts)):
        state = build_sweep(pts, u, method=method, seed=seed)
        total = state.prefix_radii + state.suffix_radii
        i = int(np.argmin(total))
        if total[i] < best.cost:
            best = BestSplit(float(total[i]), j, i, state)
    return best


def solve_msr1(points, *, seed: int = DEFAULT_SEED) -> Clustering:
    """The single-cluster solution: one enclosing ball around everything."""
    pts = as_points(points)
    return build_clustering(pts, np.zeros(len(pts), dtype=np.int64), 1, seed)


def solve_msr2(points, *, seed: int = DEFAULT_SEED, method: str = "auto") -> Clustering:
    """Optimal 2-MinSumRadius clustering of ``points`` (any dimension 2..8).

    When one cluster is optimal, the second cluster is returned empty.
    """
    pts = as_points(points)
    best = best_split(pts, seed=seed, method=method)
    labels = np.zeros(len(pts), dtype=np.int64)
    separators = []
    if best.state is not None:
        labels[best.state.order[best.split:]] = 1
        separators.append(Separator(best.state.direction, best.state.separator_offset(best.split)))
    return build_clustering(pts, labels, 2, seed, separators)
