"""Separator sweeps orthogonal to the diameters of the enclosing ball.

For a direction ``u`` the points are sorted by their projection onto ``u``;
split index ``i`` puts the first ``i`` points on one side of a hyperplane
orthogonal to ``u`` and the rest on the other.  Equal projections are
adjacent in the order, so both closed-halfspace assignments of a tie group
appear as some split.

Instead of a fully dynamic enclosing-ball structure, both sides are served
by insertion-only sequences: prefix balls computed forward and suffix balls
computed over the reversed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .geometry import DEFAULT_SEED, Ball, meb_array, meb_empty

ANGLE_TOL = 1e-9

# Relative slack before the generic path recomputes a prefix ball.
_INSERT_TOL = 1e-12


def support_directions(ball: Ball, support, points) -> list[tuple[int, np.ndarray]]:
    """Pairs ``(q, u)``: support index and unit vector from it to the center.

    Directions within 1e-9 rad of an earlier one are dropped, keeping the
    first support point that produced them.  Opposite directions are kept.
    """
    if ball.center is None or ball.radius <= 0.0:
        return []
    pts = np.asarray(points, dtype=float)
    out: list[tuple[int, np.ndarray]] = []
    for q in support:
        v = ball.center - pts[q]
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            continue
        u = v / norm
        if any(np.arccos(np.clip(u @ w, -1.0, 1.0)) <= ANGLE_TOL for _, w in out):
            continue
        out.append((int(q), u))
    return out


def candidate_directions(ball: Ball, support, points) -> list[np.ndarray]:
    """Directions of the diameters through the support points of ``ball``.

    Separators are swept orthogonal to these.  A zero-radius ball (all
    points coincide) yields no directions.
    """
    return [u for _, u in support_directions(ball, support, points)]


@dataclass(frozen=True, eq=False)
class SweepState:
    """Sorted order and prefix/suffix enclosing balls for one direction.

    ``prefix_radii[i]`` is the radius of the ball of ``order[:i]`` and
    ``suffix_radii[i]`` that of ``order[i:]``; centers are stored row-wise
    (NaN rows for the empty sets at ``prefix[0]`` and ``suffix[n]``).
    """

    direction: np.ndarray
    order: np.ndarray
    projections: np.ndarray
    prefix_centers: np.ndarray
    prefix_radii: np.ndarray
    suffix_centers: np.ndarray
    suffix_radii: np.ndarray

    @property
    def n(self) -> int:
        return len(self.order)

    def prefix_ball(self, i: int) -> Ball:
        if i == 0:
            return meb_empty()
        return Ball(self.prefix_centers[i].copy(), float(self.prefix_radii[i]))

    def suffix_ball(self, i: int) -> Ball:
        if i == self.n:
            return meb_empty()
        return Ball(self.suffix_centers[i].copy(), float(self.suffix_radii[i]))

    def separator_offset(self, i: int) -> float:
        """Position along ``direction`` of a hyperplane realizing split ``i``."""
        t = self.projections[self.order]
        if i <= 0:
            return float(t[0]) if self.n else 0.0
        if i >= self.n:
            return float(t[-1])
        return 0.5 * float(t[i - 1] + t[i])


def _normal_2d(u: np.ndarray) -> np.ndarray:
    return np.array([-u[1], u[0]])


def sweep_order(points: np.ndarray, direction, first: Optional[int] = None) -> np.ndarray:
    """Indices sorted by projection onto ``direction``.

    Planar ties are broken by the coordinate along the normal, then by index;
    in higher dimensions directly by index.  ``first`` is moved to the front.
    """
    u = np.asarray(direction, dtype=float)
    t = points @ u
    idx = np.arange(len(points))
    if first is not None:
        t = t.copy()
        t[first] = -np.inf
    if points.shape[1] == 2:
        s = points @ _normal_2d(u)
        return np.lexsort((idx, s, t))
    return np.lexsort((idx, t))


def _prefix_generic(pts: np.ndarray, order: np.ndarray, rng: np.random.Generator):
    n, d = pts.shape
    centers = np.full((n + 1, d), np.nan)
    radii = np.zeros(n + 1)
    center = None
    radius = 0.0
    for k in range(n):
        p = pts[order[k]]
        if center is None:
            center, radius = p.copy(), 0.0
        else:
            lim = radius * (1.0 + _INSERT_TOL)
            diff = p - center
            if diff @ diff > lim * lim:
                sub = pts[order[: k + 1]]
                center, radius, _ = meb_array(sub, rng, forced=[k])
        centers[k + 1] = center
        radii[k + 1] = radius
    return centers, radii


def _prefix_planar(pts: np.ndarray, order: np.ndarray, u: np.ndarray, seed: int):
    xs = np.ascontiguousarray(pts[order, 0])
    ys = np.ascontiguousarray(pts[order, 1])
    ts = xs * u[0] + ys * u[1]
    ss = -xs * u[1] + ys * u[0]
    if len(ts) > 1:
        # A forced first point may sit a rounding error past its neighbour;
        # nudge it so the hull sees a lexicographically sorted sequence.
        if (ts[0], ss[0]) > (ts[1], ss[1]):
            ts[0] = np.nextafter(ts[1], -np.inf)
        if (ts[-1], ss[-1]) < (ts[-2], ss[-2]):
            ts[-1] = np.nextafter(ts[-2], np.inf)
    cx, cy, r = _kernels.prefix_disks(xs, ys, ts, ss, seed)
    return np.column_stack([cx, cy]), r


def build_sweep(points, direction, *, first: Optional[int] = None,
                method: str = "auto", seed: int = DEFAULT_SEED) -> SweepState:
    """Sort ``points`` along ``direction`` and compute prefix and suffix balls.

    ``method`` is ``"planar"`` (hull-backed compiled sweep, d=2 only),
    ``"generic"`` (incremental Welzl, any dimension) or ``"auto"``.
    ``first`` forces one index to the front of the order.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    d = pts.shape[1] if pts.ndim == 2 else 0
    u = np.asarray(direction, dtype=float)
    order = sweep_order(pts, u, first) if n else np.zeros(0, dtype=np.int64)
    if method == "auto":
        method = "planar" if d == 2 else "generic"
    if method == "planar":
        if d != 2:
            raise ValueError("planar sweep requires d=2")
        pc, pr = _prefix_planar(pts, order, u, seed)
        sc, sr = _prefix_planar(pts, order[::-1], -u, seed + 1)
    elif method == "generic":
        rng = np.random.default_rng(seed)
        pc, pr = _prefix_generic(pts, order, rng)
        sc, sr = _prefix_generic(pts, order[::-1], rng)
    else:
        raise ValueError(f"unknown sweep method {method!r}")
    return SweepState(
        direction=u,
        order=order,
        projections=pts @ u if n else np.zeros(0),
        prefix_centers=pc,
        prefix_radii=pr,
        suffix_centers=sc[::-1].copy(),
        suffix_radii=sr[::-1].copy(),
    )


def split_cost(state: SweepState, i: int) -> tuple[Ball, Ball, float]:
    """Both side balls and their radius sum for split index ``i`` (0..n)."""
    if not 0 <= i <= state.n:
        raise IndexError(f"split index {i} outside 0..{state.n}")
    a = state.prefix_ball(i)
    b = state.suffix_ball(i)
    return a, b, a.radius + b.radius
