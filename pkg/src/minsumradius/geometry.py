"""Minimum enclosing balls in fixed dimension.

The solver is the randomized move-to-front recursion of Welzl: the input is
shuffled once, and a ball is grown by forcing every violating point onto the
boundary of the ball of the points seen before it.  Violator searches are
vectorized with numpy, so a call costs a handful of linear passes over the
input rather than a Python-level loop per point.

Everything here works in double precision with explicit tolerances; the
constants below are the ones the rest of the package agrees on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import solve_triangular
from scipy.optimize import nnls

from .errors import (
    DimensionMismatchError,
    EmptySetError,
    InvalidInputError,
    PreconditionError,
)

EPS_BOUNDARY = 1e-9
EPS_CONTAIN = 1e-9
EPS_RADIUS = 1e-9
EPS_ABS = 1e-12

MIN_DIM = 2
MAX_DIM = 8

DEFAULT_SEED = 0xC0FFEE

# Violation threshold used inside the recursion.  Much tighter than
# EPS_CONTAIN so that accepted balls are never measurably too small.
_WELZL_TOL = 1e-12
# Relative pivot below which a boundary set is treated as affinely degenerate.
_PIVOT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Ball:
    """A closed Euclidean ball.  ``center is None`` marks the empty-set sentinel."""

    center: Optional[np.ndarray]
    radius: float

    @property
    def is_empty(self) -> bool:
        return self.center is None

    @property
    def dim(self) -> Optional[int]:
        return None if self.center is None else len(self.center)

    def __repr__(self) -> str:
        if self.center is None:
            return "Ball(<empty>)"
        c = ", ".join(f"{x:.6g}" for x in self.center)
        return f"Ball(center=({c}), radius={self.radius:.6g})"


def meb_empty() -> Ball:
    """The ball of the empty set: radius 0, no center, contains nothing."""
    return Ball(None, 0.0)


def as_points(points, *, dim: Optional[int] = None) -> np.ndarray:
    """Validate ``points`` and return them as a float ``(n, d)`` array.

    An empty input yields an array of shape ``(0, d)`` (``d`` is 0 when it
    cannot be inferred).  Raises :class:`DimensionMismatchError` for ragged
    input or a dimension outside ``[2, 8]``, and :class:`InvalidInputError`
    for non-finite coordinates.
    """
    if isinstance(points, np.ndarray):
        arr = np.asarray(points, dtype=float)
        if arr.ndim != 2:
            if arr.size == 0:
                return np.empty((0, dim or 0))
            raise DimensionMismatchError(f"expected a 2-d array of points, got shape {arr.shape}")
    else:
        rows = [tuple(p) for p in points]
        if not rows:
            return np.empty((0, dim or 0))
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise DimensionMismatchError(f"points have mixed dimensions {sorted(widths)}")
        try:
            arr = np.array(rows, dtype=float)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"coordinates must be real numbers: {exc}") from None
    n, d = arr.shape
    if n == 0:
        return arr
    if dim is not None and d != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {d}")
    if not MIN_DIM <= d <= MAX_DIM:
        raise DimensionMismatchError(f"dimension {d} outside supported range [{MIN_DIM}, {MAX_DIM}]")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.all(np.isfinite(arr), axis=1))[0])
        raise InvalidInputError(f"point {bad} has a non-finite coordinate")
    return arr


def contains(ball: Ball, p, eps: float = EPS_CONTAIN, eps_abs: float = EPS_ABS) -> bool:
    """True iff ``p`` lies in ``ball`` up to ``radius * eps + eps_abs``."""
    if ball.center is None:
        return False
    p = np.asarray(p, dtype=float)
    if p.shape != ball.center.shape:
        raise DimensionMismatchError(f"point of dimension {p.size} vs ball of dimension {ball.center.size}")
    return float(np.linalg.norm(p - ball.center)) <= ball.radius * (1.0 + eps) + eps_abs


def on_boundary(ball: Ball, p, eps: float = EPS_BOUNDARY, eps_abs: float = EPS_ABS) -> bool:
    if ball.center is None:
        return False
    dist = float(np.linalg.norm(np.asarray(p, dtype=float) - ball.center))
    return abs(dist - ball.radius) <= ball.radius * eps + eps_abs


def antipodal(ball: Ball, p) -> np.ndarray:
    """Reflect the boundary point ``p`` through the center of ``ball``.

    The segment from ``p`` to the result is the diameter of ``ball`` through
    ``p``.  Raises :class:`PreconditionError` if ``p`` is not on the boundary.
    """
    p = np.asarray(p, dtype=float)
    if ball.center is None or p.shape != ball.center.shape:
        raise PreconditionError("antipodal point needs a nonempty ball of matching dimension")
    if not on_boundary(ball, p):
        raise PreconditionError("point is not on the ball boundary")
    return 2.0 * ball.center - p


def circumball(boundary_pts) -> Optional[Ball]:
    """Smallest ball having every given point on its boundary.

    The center is the circumcenter inside the affine hull of the points.
    Returns None when the points are affinely dependent (up to a relative
    pivot of 1e-12), in which case no ball of the expected rank exists.
    """
    pts = np.asarray(boundary_pts, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        return None
    m, d = pts.shape
    if m > d + 1:
        return None
    if m == 1:
        return Ball(pts[0].copy(), 0.0)
    if m == 2:
        center = 0.5 * (pts[0] + pts[1])
        radius = 0.5 * float(np.linalg.norm(pts[1] - pts[0]))
        if radius == 0.0:
            return None
        return Ball(center, radius)
    v = pts[1:] - pts[0]
    scale = float(np.max(np.linalg.norm(v, axis=1)))
    if scale == 0.0:
        return None
    # Edge vectors v_i = Q R; the offset o = Q y from pts[0] must satisfy
    # v_i . o = |v_i|^2 / 2, i.e. R^T y = b.  A tiny diagonal entry of R
    # means a degenerate simplex.
    q, r = np.linalg.qr(v.T)
    if np.min(np.abs(np.diag(r))) < _PIVOT_TOL * scale:
        return None
    b = 0.5 * np.einsum("ij,ij->i", v, v)
    y = solve_triangular(r, b, trans="T")
    offset = q @ y
    return Ball(pts[0] + offset, float(np.linalg.norm(offset)))


def _basis_ball(pts: np.ndarray, basis: list[int]) -> tuple[Optional[np.ndarray], float]:
    if not basis:
        return None, 0.0
    bp = pts[basis]
    # Canonical point order: the same coordinates always round the same way.
    bp = bp[np.lexsort(bp.T[::-1])]
    ball = circumball(bp)
    if ball is not None:
        return ball.center, ball.radius
    # Degenerate boundary set: fall back to the best lower-rank basis.
    best = None
    for size in range(len(basis) - 1, 0, -1):
        for sub in itertools.combinations(range(len(basis)), size):
            cand = circumball(bp[list(sub)])
            if cand is None:
                continue
            excess = float(np.max(np.linalg.norm(bp - cand.center, axis=1))) - cand.radius
            key = (excess > EPS_CONTAIN * max(cand.radius, EPS_ABS), cand.radius + max(excess, 0.0))
            if best is None or key < best[0]:
                best = (key, cand)
    if best is None:
        return bp[0].copy(), 0.0
    cand = best[1]
    radius = max(cand.radius, float(np.max(np.linalg.norm(bp - cand.center, axis=1))))
    return cand.center, radius


def _first_violator(pts: np.ndarray, start: int, end: int, center: np.ndarray, radius: float) -> int:
    """Index of the first row in ``pts[start:end]`` outside the ball, or -1."""
    limit = radius * (1.0 + _WELZL_TOL)
    limit2 = limit * limit
    chunk = 1024
    i = start
    while i < end:
        stop = min(end, i + chunk)
        seg = pts[i:stop] - center
        out = np.flatnonzero(np.einsum("ij,ij->i", seg, seg) > limit2)
        if out.size:
            return i + int(out[0])
        i = stop
        chunk *= 4
    return -1


def _mtf(src: np.ndarray, pts: np.ndarray, ids: np.ndarray, end: int, basis: list[int]):
    """Move-to-front Welzl over rows ``pts[:end]`` with ``basis`` on the boundary.

    ``pts`` is a private permuted copy of ``src`` and ``ids`` maps its rows
    back to indices of ``src``; both are reordered in place.  ``basis`` holds
    indices of ``src``.
    """
    center, radius = _basis_ball(src, basis)
    used = list(basis)
    if len(basis) == pts.shape[1] + 1:
        return center, radius, used
    i = 0
    while i < end:
        j = i if center is None else _first_violator(pts, i, end, center, radius)
        if j < 0:
            break
        idx = int(ids[j])
        row = pts[j].copy()
        center, radius, used = _mtf(src, pts, ids, j, basis + [idx])
        pts[1 : j + 1] = pts[0:j]
        ids[1 : j + 1] = ids[0:j]
        pts[0] = row
        ids[0] = idx
        i = j + 1
    return center, radius, used


def _in_hull_weights(pts: np.ndarray, center: np.ndarray) -> tuple[np.ndarray, float]:
    """Nonnegative weights summing to one that reproduce ``center`` from ``pts``."""
    scale = max(float(np.max(np.abs(pts - center))), 1.0)
    a = np.vstack([(pts - center).T / scale, np.ones(len(pts))])
    b = np.zeros(a.shape[0])
    b[-1] = 1.0
    w, resid = nnls(a, b)
    return w, float(resid)


def _extract_support(pts: np.ndarray, center: np.ndarray, radius: float, basis: list[int]) -> list[int]:
    """Pick at most d+1 boundary points whose convex hull holds the center.

    Such a set has the same minimum enclosing ball as the whole input.
    """
    d = pts.shape[1]
    basis = sorted(set(basis))
    if radius == 0.0:
        return basis[:1]
    w, resid = _in_hull_weights(pts[basis], center)
    if resid <= 1e-9:
        chosen = [basis[i] for i in np.flatnonzero(w > 0)]
    else:
        dist = np.linalg.norm(pts - center, axis=1)
        cand = np.flatnonzero(np.abs(dist - radius) <= EPS_BOUNDARY * radius + EPS_ABS)
        w, resid = _in_hull_weights(pts[cand], center)
        chosen = [int(cand[i]) for i in np.flatnonzero(w > 0)]
        if not chosen:
            chosen = basis
    if len(chosen) > d + 1:
        # Carathéodory reduction on the (rare) over-full weight vector.
        chosen = [c for _, c in sorted(zip(-w[w > 0], chosen))][: d + 1]
    return sorted(chosen)


def meb_array(pts: np.ndarray, rng: Optional[np.random.Generator] = None,
              forced: Sequence[int] = ()) -> tuple[Optional[np.ndarray], float, list[int]]:
    """Unchecked MEB of an ``(n, d)`` array; ``forced`` indices lie on the boundary.

    Returns ``(center, radius, basis)``.  ``forced`` points are excluded from
    the scan, so the result is the smallest ball containing all points that
    has the forced ones on its boundary.
    """
    n = len(pts)
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED)
    forced = list(forced)
    if forced:
        mask = np.ones(n, dtype=bool)
        mask[forced] = False
        ids = np.flatnonzero(mask)
        rng.shuffle(ids)
    else:
        ids = rng.permutation(n)
    return _mtf(pts, pts[ids], ids, len(ids), forced)


def meb(points, seed: int = DEFAULT_SEED) -> tuple[Ball, list[int]]:
    """Minimum enclosing ball of a nonempty point set, plus a support set.

    The support set holds 1..d+1 input indices lying on the boundary whose own
    enclosing ball equals the returned one.  ``seed`` fixes the shuffle, which
    only affects which support set is returned when several are valid.
    """
    pts = as_points(points)
    if len(pts) == 0:
        raise EmptySetError("minimum enclosing ball of an empty set")
    # Run on the distinct points in sorted order so that duplicating or
    # reordering the input cannot change which basis the shuffle reaches.
    order = np.lexsort(pts.T[::-1])
    ordered = pts[order]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(ordered[1:] != ordered[:-1], axis=1)
    ids = order[keep]
    distinct = np.ascontiguousarray(pts[ids])
    center, radius, basis = meb_array(distinct, np.random.default_rng(seed))
    support = _extract_support(distinct, center, radius, basis)
    return Ball(center, radius), sorted(int(ids[i]) for i in support)
