from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import DEFAULT_SEED, EPS_ABS, EPS_CONTAIN, Ball, meb_array, meb_empty


@dataclass(frozen=True, eq=False)
class Separator:
    """Hyperplane ``{x : x . direction = offset}`` used to split a clustering."""

    direction: np.ndarray
    offset: float


@dataclass(eq=False)
class Clustering:
    """Assignment of points to ``k`` clusters with one enclosing ball each.

    Empty clusters carry the empty-ball sentinel and contribute nothing to
    ``cost``.
    """

    k: int
    assignment: np.ndarray
    balls: list[Ball]
    cost: float
    separators: list[Separator] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def members(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == j)

    def validate(self, points, eps: float = EPS_CONTAIN) -> None:
        """Raise AssertionError unless every point lies in its cluster's ball."""
        pts = np.asarray(points, dtype=float)
        assert len(self.balls) == self.k
        assert len(self.assignment) == len(pts)
        if len(pts):
            assert self.assignment.min() >= 0 and self.assignment.max() < self.k
        total = 0.0
        for j, ball in enumerate(self.balls):
            idx = self.members(j)
            if ball.center is None:
                assert idx.size == 0, f"cluster {j} has members but an empty ball"
                continue
            total += ball.radius
            if idx.size:
                dist = np.linalg.norm(pts[idx] - ball.center, axis=1)
                slack = ball.radius * (1.0 + eps) + EPS_ABS * max(1.0, ball.radius)
                assert np.all(dist <= slack), f"cluster {j} escapes its ball"
        assert abs(total - self.cost) <= 1e-12 * max(1.0, total)


def build_clustering(pts: np.ndarray, labels: np.ndarray, k: int,
                     seed: int = DEFAULT_SEED, separators=()) -> Clustering:
    """Compute each cluster's enclosing ball for a fixed labelling."""
    rng = np.random.default_rng(seed)
    labels = np.asarray(labels, dtype=np.int64)
    balls = []
    for j in range(k):
        idx = np.flatnonzero(labels == j)
        if idx.size == 0:
            balls.append(meb_empty())
            continue
        center, radius, _ = meb_array(pts[idx], rng)
        balls.append(Ball(center, radius))
    cost = float(sum(b.radius for b in balls))
    return Clustering(k, labels, balls, cost, list(separators))
