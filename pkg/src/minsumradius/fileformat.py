"""Point files in, result documents out.

A point file is plain text with one point per line, coordinates separated by
commas and/or whitespace.  Blank lines and lines starting with ``#`` are
skipped.  The dimension is taken from the first data line.
"""

from __future__ import annotations

import json
import math
import re
from typing import Optional

import numpy as np

from .clustering import Clustering
from .errors import InvalidInputError

RESULT_SCHEMA_VERSION = 1

_SPLIT = re.compile(r"[,\s]+")


class ParseError(InvalidInputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_points(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _SPLIT.split(line) if f]
        try:
            coords = [float(f) for f in fields]
        except ValueError:
            raise ParseError(f"cannot parse coordinates {line!r}", lineno) from None
        if not all(math.isfinite(c) for c in coords):
            raise ParseError("non-finite coordinate", lineno)
        if width is None:
            width = len(coords)
        elif len(coords) != width:
            raise ParseError(f"expected {width} coordinates, found {len(coords)}", lineno)
        rows.append(coords)
    if not rows:
        return np.empty((0, 0))
    return np.array(rows, dtype=float)


def read_points(path: str) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def write_points(path: str, points) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in np.asarray(points, dtype=float):
            fh.write(",".join(repr(float(x)) for x in p) + "\n")


def result_document(clustering: Clustering, *, solver: str, dim: int, seed: int,
                    elapsed_ms: Optional[float] = None) -> dict:
    clusters = []
    for j, ball in enumerate(clustering.balls):
        clusters.append({
            "center": None if ball.center is None else [float(x) for x in ball.center],
            "radius": float(ball.radius),
            "member_indices": [int(i) for i in clustering.members(j)],
        })
    doc = {
        "schema": RESULT_SCHEMA_VERSION,
        "solver": solver,
        "k": clustering.k,
        "n": clustering.n,
        "dim": dim,
        "seed": seed,
        "total_cost": float(clustering.cost),
        "clusters": clusters,
    }
    if elapsed_ms is not None:
        doc["elapsed_ms"] = round(float(elapsed_ms), 3)
    return doc


def validate_document(doc: dict) -> None:
    """Raise ValueError unless members partition 0..n-1 and the cost adds up."""
    n = doc["n"]
    seen = sorted(i for c in doc["clusters"] for i in c["member_indices"])
    if seen != list(range(n)):
        raise ValueError("member_indices do not partition 0..n-1")
    if len(doc["clusters"]) != doc["k"]:
        raise ValueError("cluster count differs from k")
    total = sum(c["radius"] for c in doc["clusters"])
    if abs(total - doc["total_cost"]) > 1e-12 * max(1.0, total):
        raise ValueError(f"total_cost {doc['total_cost']} differs from radius sum {total}")


def dumps(doc: dict) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False)
    validate_document(json.loads(text))
    return text


def format_text(doc: dict) -> str:
    lines = [
        f"solver      {doc['solver']}",
        f"k / n / dim {doc['k']} / {doc['n']} / {doc['dim']}",
        f"total cost  {doc['total_cost']:.12g}",
    ]
    if "elapsed_ms" in doc:
        lines.append(f"elapsed     {doc['elapsed_ms']:.1f} ms")
    lines.append("")
    lines.append(f"{'cluster':>7}  {'size':>6}  {'radius':>14}  center")
    for j, c in enumerate(doc["clusters"]):
        center = "-" if c["center"] is None else "(" + ", ".join(f"{x:.6g}" for x in c["center"]) + ")"
        lines.append(f"{j:>7}  {len(c['member_indices']):>6}  {c['radius']:>14.9g}  {center}")
    return "\n".join(lines)
