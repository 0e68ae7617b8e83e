"""Compiled inner loops for the planar prefix sweep.

Points arrive already sorted along the sweep direction.  A monotone-chain
convex hull of the prefix is maintained alongside the prefix disk: a newly
inserted point outside the current disk forces a recomputation, and only the
hull vertices (plus the new point, which must lie on the new boundary) take
part in it.
"""

import numpy as np
from numba import njit

# Relative slack before a point counts as outside a disk.
_TOL = 1e-12


@njit(cache=True)
def _outside(x, y, cx, cy, r):
    dx = x - cx
    dy = y - cy
    lim = r * (1.0 + _TOL)
    return dx * dx + dy * dy > lim * lim


@njit(cache=True)
def _circle3(ax, ay, bx, by, qx, qy):
    """Circumcircle through three points; ok=False when they are collinear."""
    bax = bx - ax
    bay = by - ay
    qax = qx - ax
    qay = qy - ay
    den = 2.0 * (bax * qay - bay * qax)
    scale = max(bax * bax + bay * bay, qax * qax + qay * qay)
    if abs(den) <= 1e-12 * scale:
        return 0.0, 0.0, 0.0, False
    b2 = bax * bax + bay * bay
    q2 = qax * qax + qay * qay
    ux = (qay * b2 - bay * q2) / den
    uy = (bax * q2 - qax * b2) / den
    return ax + ux, ay + uy, np.sqrt(ux * ux + uy * uy), True


@njit(cache=True)
def _diam(ax, ay, bx, by):
    cx = 0.5 * (ax + bx)
    cy = 0.5 * (ay + by)
    return cx, cy, 0.5 * np.sqrt((ax - bx) ** 2 + (ay - by) ** 2)


@njit(cache=True)
def _widest_pair(ax, ay, bx, by, qx, qy):
    d_ab = (ax - bx) ** 2 + (ay - by) ** 2
    d_aq = (ax - qx) ** 2 + (ay - qy) ** 2
    d_bq = (bx - qx) ** 2 + (by - qy) ** 2
    if d_ab >= d_aq and d_ab >= d_bq:
        return _diam(ax, ay, bx, by)
    if d_aq >= d_bq:
        return _diam(ax, ay, qx, qy)
    return _diam(bx, by, qx, qy)


@njit(cache=True)
def disk_with_point(xs, ys, cand, m, qx, qy):
    """Smallest disk containing ``cand[:m]`` with (qx, qy) on its boundary.

    ``cand`` is shuffled in place; expected linear time.
    """
    for i in range(m - 1, 0, -1):
        j = np.random.randint(0, i + 1)
        t = cand[i]
        cand[i] = cand[j]
        cand[j] = t
    cx, cy, r = qx, qy, 0.0
    for i in range(m):
        a = cand[i]
        if not _outside(xs[a], ys[a], cx, cy, r):
            continue
        cx, cy, r = _diam(qx, qy, xs[a], ys[a])
        for j in range(i):
            b = cand[j]
            if not _outside(xs[b], ys[b], cx, cy, r):
                continue
            nx, ny, nr, ok = _circle3(xs[a], ys[a], xs[b], ys[b], qx, qy)
            if ok:
                cx, cy, r = nx, ny, nr
            else:
                cx, cy, r = _widest_pair(xs[a], ys[a], xs[b], ys[b], qx, qy)
    return cx, cy, r


@njit(cache=True)
def prefix_disks(xs, ys, ts, ss, seed):
    """Minimum enclosing disks of every prefix of an ordered point sequence.

    ``xs, ys`` are the coordinates in sweep order; ``ts, ss`` are the same
    points in the sweep frame (projection onto the direction, then onto its
    normal) and must be lexicographically nondecreasing.  Returns arrays of
    length n+1; entry 0 is the empty prefix (radius 0, NaN center).
    """
    np.random.seed(seed)
    n = xs.shape[0]
    cx_out = np.empty(n + 1)
    cy_out = np.empty(n + 1)
    r_out = np.zeros(n + 1)
    cx_out[0] = np.nan
    cy_out[0] = np.nan
    lower = np.empty(n, dtype=np.int64)
    upper = np.empty(n, dtype=np.int64)
    cand = np.empty(2 * n, dtype=np.int64)
    nl = 0
    nu = 0
    cx, cy, r = 0.0, 0.0, 0.0
    for k in range(n):
        tk = ts[k]
        sk = ss[k]
        while nl >= 2:
            a = lower[nl - 2]
            b = lower[nl - 1]
            if (ts[b] - ts[a]) * (sk - ss[a]) - (ss[b] - ss[a]) * (tk - ts[a]) <= 0.0:
                nl -= 1
            else:
                break
        lower[nl] = k
        nl += 1
        while nu >= 2:
            a = upper[nu - 2]
            b = upper[nu - 1]
            if (ts[b] - ts[a]) * (sk - ss[a]) - (ss[b] - ss[a]) * (tk - ts[a]) >= 0.0:
                nu -= 1
            else:
                break
        upper[nu] = k
        nu += 1
        if k == 0:
            cx, cy, r = xs[0], ys[0], 0.0
        elif _outside(xs[k], ys[k], cx, cy, r):
            m = 0
            for i in range(nl - 1):
                cand[m] = lower[i]
                m += 1
            for i in range(nu - 1):
                cand[m] = upper[i]
                m += 1
            cx, cy, r = disk_with_point(xs, ys, cand, m, xs[k], ys[k])
        cx_out[k + 1] = cx
        cy_out[k + 1] = cy
        r_out[k + 1] = r
    return cx_out, cy_out, r_out
