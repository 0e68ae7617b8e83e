"""Exact planar 3-MinSumRadius.

Some optimal 3-clustering has a line, orthogonal to the diameter through a
support point ``q`` of the enclosing disk, that cuts the cluster holding
``q`` off from the other two.  So for every such direction and every split,
the side containing ``q`` becomes one cluster and the rest is handed to the
exact 2-clustering solver.
"""

from __future__ import annotations

import numpy as np

from .clustering import Clustering, Separator, build_clustering
from .errors import UnsupportedDimensionError
from .geometry import DEFAULT_SEED, as_points, meb
from .msr2 import best_split, solve_msr2
from .sweep import build_sweep, support_directions


def solve_msr3(points, *, seed: int = DEFAULT_SEED, method: str = "auto") -> Clustering:
    """Optimal 3-MinSumRadius clustering of planar ``points``.

    Clusters that turn out unnecessary are returned empty.  Ties resolve to
    the 2-clustering, then the lowest direction index, then the lowest split.
    """
    pts = as_points(points)
    n = len(pts)
    if n and pts.shape[1] != 2:
        raise UnsupportedDimensionError(f"3-MinSumRadius is implemented for d=2 only, got d={pts.shape[1]}")
    two = solve_msr2(pts, seed=seed, method=method)
    best_cost = two.cost
    winner = None
    if n >= 3:
        ball, support = meb(pts, seed)
        for q, u in support_directions(ball, support, pts):
            # u points from q into the disk, so q has the smallest projection
            # and the side containing q is always a prefix of the order.
            state = build_sweep(pts, u, first=q, method=method, seed=seed)
            assert state.order[0] == q
            radii = state.prefix_radii
            for i in range(1, n):
                # Prefix radii never decrease, so nothing further can win.
                if radii[i] >= best_cost:
                    break
                rest = best_split(pts[state.order[i:]], seed=seed, method=method)
                total = float(radii[i]) + rest.cost
                if total < best_cost:
                    best_cost = total
                    winner = (state, i)
    if winner is None:
        labels = two.assignment
        return build_clustering(pts, labels, 3, seed, two.separators)
    state, i = winner
    rest_idx = state.order[i:]
    inner = solve_msr2(pts[rest_idx], seed=seed, method=method)
    labels = np.zeros(n, dtype=np.int64)
    labels[rest_idx] = 1 + inner.assignment
    separators = [Separator(state.direction, state.separator_offset(i))] + inner.separators
    return build_clustering(pts, labels, 3, seed, separators)
