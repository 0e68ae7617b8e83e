"""Instance generators and timing helpers for scaling measurements.

Randomness comes from numpy's Philox counter-based generator, whose stream
for a given seed is fixed across platforms and numpy versions, so generated
fixtures are reproducible anywhere.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geometry import DEFAULT_SEED

DISTRIBUTIONS = ("uniform", "gaussian-blobs", "circle-boundary", "collinear", "duplicates")


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    dim: int = 2
    distribution: str = "uniform"
    seed: int = 0
    blobs: int = 3
    spread: float = 0.05


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _unit_vectors(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    v = rng.standard_normal((n, dim))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return v / norms


def generate(spec: InstanceSpec) -> np.ndarray:
    """Deterministic ``(n, dim)`` point array for ``spec``.

    ``gaussian-blobs`` deals points round-robin to ``blobs`` centers;
    ``circle-boundary`` puts an antipodal pair first so the enclosing ball is
    the unit ball; ``duplicates`` repeats earlier points for about half of
    the set.
    """
    n, dim, rng = spec.n, spec.dim, _rng(spec.seed)
    if spec.distribution not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {spec.distribution!r}; expected one of {DISTRIBUTIONS}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if spec.distribution == "uniform":
        return rng.random((n, dim))
    if spec.distribution == "gaussian-blobs":
        centers = rng.random((spec.blobs, dim))
        labels = np.arange(n) % spec.blobs
        return centers[labels] + spec.spread * rng.standard_normal((n, dim))
    if spec.distribution == "circle-boundary":
        pts = _unit_vectors(rng, n, dim)
        if n >= 2:
            pts[1] = -pts[0]
        return pts
    if spec.distribution == "collinear":
        start = rng.random(dim)
        step = _unit_vectors(rng, 1, dim)[0]
        return start + np.outer(rng.random(n), step)
    pts = rng.random((n, dim))
    for i in range(1, n):
        if rng.random() < 0.5:
            pts[i] = pts[rng.integers(0, i)]
    return pts


@dataclass
class Timing:
    n: int
    times: list[float]
    deterministic: bool

    @property
    def median(self) -> float:
        return float(np.median(self.times))

    @property
    def p10(self) -> float:
        return float(np.percentile(self.times, 10))

    @property
    def p90(self) -> float:
        return float(np.percentile(self.times, 90))


def time_solver(solver: Callable[[np.ndarray], object], spec: InstanceSpec, trials: int = 3) -> Timing:
    """Wall-clock ``solver(points)`` ``trials`` times after one discarded warmup.

    Runs are sequential.  ``deterministic`` records whether every run
    returned the same cost.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    pts = generate(spec)
    first = solver(pts)
    costs = {getattr(first, "cost", None)}
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        out = solver(pts)
        times.append(time.perf_counter() - t0)
        costs.add(getattr(out, "cost", None))
    return Timing(spec.n, times, len(costs) == 1)


@dataclass
class SlopeFit:
    slope: float
    intercept: float
    r2: float


def fit_loglog(sizes, times) -> SlopeFit:
    """Least-squares line through ``(log n, log t)``."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(times, dtype=float))
    if len(x) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0 else 1.0
    return SlopeFit(float(slope), float(intercept), r2)


def scaling_report(solver: Callable[[np.ndarray], object], sizes, *, dim: int = 2,
                   distribution: str = "uniform", trials: int = 3,
                   seed: int = DEFAULT_SEED) -> tuple[list[Timing], SlopeFit]:
    timings = [time_solver(solver, InstanceSpec(n, dim, distribution, seed), trials) for n in sizes]
    fit = fit_loglog([t.n for t in timings], [t.median for t in timings])
    return timings, fit
