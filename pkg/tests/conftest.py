import itertools
import math

import numpy as np
import pytest
from hypothesis import strategies as st

from minsumradius.geometry import meb


def circle_oracle(points):
    """Smallest circle over all pair/triple circumcircles that covers every point.

    Self-contained planar formulas, deliberately sharing no code with the
    package.
    """
    pts = [tuple(map(float, p)) for p in points]
    if len(pts) == 1:
        return pts[0], 0.0
    cands = []
    for a, b in itertools.combinations(pts, 2):
        cands.append((((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), math.dist(a, b) / 2))
    for a, b, c in itertools.combinations(pts, 3):
        bx, by, cx, cy = b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]
        den = 2 * (bx * cy - by * cx)
        if abs(den) < 1e-14:
            continue
        ux = (cy * (bx * bx + by * by) - by * (cx * cx + cy * cy)) / den
        uy = (bx * (cx * cx + cy * cy) - cx * (bx * bx + by * by)) / den
        cands.append(((a[0] + ux, a[1] + uy), math.hypot(ux, uy)))
    best = None
    for center, r in cands:
        if all(math.dist(center, p) <= r * (1 + 1e-10) + 1e-12 for p in pts):
            if best is None or r < best[1]:
                best = (center, r)
    return best


def naive_brute(points, k):
    """Enumerate every labelling (point 0 pinned to label 0) and score it with meb()."""
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n == 0:
        return 0.0
    cache = {}

    def radius(idx):
        if not idx:
            return 0.0
        if idx not in cache:
            cache[idx] = meb(pts[list(idx)])[0].radius
        return cache[idx]

    best = math.inf
    for rest in itertools.product(range(k), repeat=n - 1):
        labels = (0,) + rest
        total = sum(radius(tuple(i for i in range(n) if labels[i] == j)) for j in range(k))
        best = min(best, total)
    return best


def coords(lo=-100.0, hi=100.0):
    return st.floats(lo, hi, allow_nan=False, allow_infinity=False)


def point_sets(dim=2, min_size=1, max_size=10, lo=-100.0, hi=100.0):
    return st.lists(st.tuples(*[coords(lo, hi)] * dim), min_size=min_size, max_size=max_size).map(
        lambda rows: np.array(rows, dtype=float).reshape(len(rows), dim)
    )


def random_rotation(rng, dim):
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
