"""Exhaustive ground truth for small instances.

Every subset of the input gets its enclosing radius from a table built
without the Welzl solver: the smallest ball through at most d+1 input points
that covers the subset is its minimum enclosing ball.  Partitions into at
most three clusters are then enumerated over that table, with point 0 pinned
to the first cluster to remove label symmetry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .clustering import Clustering
from .errors import SizeGuardError
from .geometry import DEFAULT_SEED, Ball, as_points, circumball, meb, meb_empty
from .sweep import support_directions, sweep_order

SIZE_LIMITS = {1: 40, 2: 14, 3: 10}

COST_TOL = 1e-9
# Looser than any solver tolerance would be wrong here: a slack ball would
# under-report radii.  This only absorbs rounding on boundary points.
_COVER_TOL = 1e-10


@dataclass
class SubsetTable:
    """Enclosing radius (and a realizing ball) for every subset bitmask."""

    n: int
    radius: np.ndarray
    source: np.ndarray  # index into ``balls``; -1 for the empty set
    balls: list[Ball]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def ball(self, mask: int) -> Ball:
        if mask == 0:
            return meb_empty()
        return self.balls[int(self.source[mask])]


def _candidate_balls(pts: np.ndarray) -> list[tuple[Ball, int]]:
    n, d = pts.shape
    weights = 1 << np.arange(n, dtype=np.int64)
    out = []
    for size in range(1, min(n, d + 1) + 1):
        for combo in itertools.combinations(range(n), size):
            ball = circumball(pts[list(combo)])
            if ball is None:
                continue
            dist = np.linalg.norm(pts - ball.center, axis=1)
            inside = dist <= ball.radius * (1.0 + _COVER_TOL) + 1e-12 * max(1.0, ball.radius)
            out.append((ball, int(weights[inside].sum())))
    return out


def subset_table(points) -> SubsetTable:
    pts = as_points(points)
    n = len(pts)
    subsets = np.arange(1 << n, dtype=np.int64)
    radius = np.full(1 << n, np.inf)
    source = np.full(1 << n, -1, dtype=np.int64)
    radius[0] = 0.0
    cands = _candidate_balls(pts) if n else []
    balls = [b for b, _ in cands]
    for c, (ball, mask) in enumerate(cands):
        fits = (subsets & ~mask) == 0
        better = fits & (ball.radius < radius)
        radius[better] = ball.radius
        source[better] = c
    radius[0] = 0.0
    source[0] = -1
    return SubsetTable(n, radius, source, balls)


def _submasks_with_low_bit(mask: int) -> np.ndarray:
    """All submasks of ``mask`` that contain its lowest set bit."""
    bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
    low, free = bits[0], bits[1:]
    counter = np.arange(1 << len(free), dtype=np.int64)
    sub = np.full(counter.shape, 1 << low, dtype=np.int64)
    for j, b in enumerate(free):
        sub |= ((counter >> j) & 1) << b
    return sub


def best_two(table: SubsetTable) -> tuple[np.ndarray, np.ndarray]:
    """For every mask T, the cheapest split of T into at most two clusters.

    Returns ``(cost, part)`` where ``part[T]`` is one side of the best split
    (the other being ``T ^ part[T]``).
    """
    size = 1 << table.n
    cost = np.zeros(size)
    part = np.zeros(size, dtype=np.int64)
    r = table.radius
    for t in range(1, size):
        sub = _submasks_with_low_bit(t)
        vals = r[sub] + r[t ^ sub]
        i = int(np.argmin(vals))
        cost[t] = vals[i]
        part[t] = sub[i]
    return cost, part


def _check_size(n: int, k: int, force: bool) -> None:
    if k not in SIZE_LIMITS:
        raise ValueError(f"oracle supports k in 1..3, got {k}")
    if n > SIZE_LIMITS[k] and not force:
        raise SizeGuardError(f"n={n} exceeds the exhaustive limit {SIZE_LIMITS[k]} for k={k}; pass force=True to override")


def _clustering_from_masks(table: SubsetTable, masks: list[int], k: int) -> Clustering:
    labels = np.zeros(table.n, dtype=np.int64)
    balls = []
    for j, m in enumerate(masks):
        for b in range(table.n):
            if m >> b & 1:
                labels[b] = j
        balls.append(table.ball(m))
    balls += [meb_empty()] * (k - len(balls))
    cost = float(sum(b.radius for b in balls))
    return Clustering(k, labels, balls, cost)


def optimal_masks(table: SubsetTable, k: int) -> list[int]:
    """Cluster bitmasks (length k, possibly with zeros) of an optimal partition."""
    full = table.full
    if table.n == 0:
        return [0] * k
    if k == 1:
        return [full]
    firsts = np.arange(1, full + 1, 2, dtype=np.int64)  # masks holding point 0
    r = table.radius
    if k == 2:
        vals = r[firsts] + r[full ^ firsts]
        s = int(firsts[int(np.argmin(vals))])
        return [s, full ^ s]
    cost2, part2 = best_two(table)
    vals = r[firsts] + cost2[full ^ firsts]
    s = int(firsts[int(np.argmin(vals))])
    rest = full ^ s
    u = int(part2[rest]) if rest else 0
    return [s, u, rest ^ u]


def brute_msr(points, k: int, *, force: bool = False) -> Clustering:
    """Globally optimal k-MinSumRadius clustering by exhaustive enumeration.

    Raises :class:`SizeGuardError` above n=14 (k=2) or n=10 (k=3) unless
    ``force`` is set.
    """
    pts = as_points(points)
    _check_size(len(pts), k, force)
    table = subset_table(pts)
    masks = [m for m in optimal_masks(table, k) if m] or [0]
    return _clustering_from_masks(table, masks, k)


@dataclass
class LemmaReport:
    instance_id: str
    lemma: str  # disjoint-balls | k2-separator | k3-separator
    holds: bool
    optimum: float
    witness: Optional[dict] = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "lemma": self.lemma,
            "holds": self.holds,
            "optimum": self.optimum,
            "witness": self.witness,
            "detail": self.detail,
        }


def check_disjoint_optimum(points, k: int, *, instance_id: str = "", force: bool = False) -> LemmaReport:
    """Check that an optimum exists whose cluster balls are pairwise disjoint.

    Starting from an exhaustive optimum, clusters whose balls intersect are
    merged until none do; every merge must not raise the cost.
    """
    pts = as_points(points)
    _check_size(len(pts), k, force)
    table = subset_table(pts)
    masks = [m for m in optimal_masks(table, k) if m]
    optimum = float(sum(table.radius[m] for m in masks))
    tol = COST_TOL * max(1.0, optimum)
    merges = 0
    monotone = True
    while True:
        pair = None
        for a, b in itertools.combinations(range(len(masks)), 2):
            ba, bb = table.ball(masks[a]), table.ball(masks[b])
            gap = float(np.linalg.norm(ba.center - bb.center)) - (ba.radius + bb.radius)
            # Touching counts as intersecting: the balls share a point.
            if gap <= COST_TOL * max(1.0, ba.radius + bb.radius):
                pair = (a, b)
                break
        if pair is None:
            break
        a, b = pair
        before = float(sum(table.radius[m] for m in masks))
        merged = masks[a] | masks[b]
        masks = [m for j, m in enumerate(masks) if j not in pair] + [merged]
        after = float(sum(table.radius[m] for m in masks))
        monotone &= after <= before + tol
        merges += 1
    final = float(sum(table.radius[m] for m in masks))
    holds = monotone and abs(final - optimum) <= tol
    return LemmaReport(instance_id, "disjoint-balls", bool(holds), optimum,
                       detail={"merges": merges, "clusters": len(masks)})


def check_separator_lemma(points, k: int, *, instance_id: str = "", force: bool = False,
                          seed: int = DEFAULT_SEED) -> LemmaReport:
    """Check that a split orthogonal to a support diameter attains the optimum.

    For k=2 both sides become clusters; for k=3 the side containing the
    support point becomes one cluster and the other side is split optimally
    by enumeration.
    """
    if k not in (2, 3):
        raise ValueError("separator lemma is stated for k=2 and k=3")
    pts = as_points(points)
    n = len(pts)
    _check_size(n, k, force)
    name = f"k{k}-separator"
    table = subset_table(pts)
    masks = optimal_masks(table, k)
    optimum = float(sum(table.radius[m] for m in masks))
    if n == 0:
        return LemmaReport(instance_id, name, True, 0.0, witness={"direction": None, "split": 0})
    ball, support = meb(pts, seed)
    dirs = support_directions(ball, support, pts)
    if not dirs:
        # All points coincide: the one-sided split is the optimum.
        return LemmaReport(instance_id, name, optimum <= COST_TOL, optimum,
                           witness={"direction": None, "split": n})
    r = table.radius
    cost2 = best_two(table)[0] if k == 3 else None
    tol = COST_TOL * max(1.0, optimum)
    best = (np.inf, None)
    for j, (q, u) in enumerate(dirs):
        order = sweep_order(pts, u, first=q if k == 3 else None)
        if k == 3:
            assert order[0] == q
        prefix = 0
        splits = [0]
        for i in range(n):
            prefix |= 1 << int(order[i])
            splits.append(prefix)
        splits = np.array(splits, dtype=np.int64)
        rest = table.full ^ splits
        if k == 2:
            vals = r[splits] + r[rest]
        else:
            vals = r[splits] + cost2[rest]
            vals[0] = np.inf  # the side holding q must be nonempty
        i = int(np.argmin(vals))
        if vals[i] < best[0] - tol:
            best = (float(vals[i]), {"direction_index": j, "direction": [float(x) for x in u],
                                     "support_point": q, "split": i})
    holds = best[0] <= optimum + tol
    return LemmaReport(instance_id, name, bool(holds), optimum,
                       witness=best[1] if holds else None,
                       detail={"best_separated_cost": best[0], "directions": len(dirs)})
