"""Hausdorff distance between a digital segment and the Euclidean segment it stands for.

The digital segment is measured as the polyline through its grid points.
Polyline to Euclidean segment is exact: distance to a segment is convex along
each unit edge, so the maximum sits at a grid point.  Euclidean segment to
polyline is sampled; the distance function is 1-Lipschitz, so the true value
is at most ``step / 2`` above the sampled maximum.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .engine import OrderAssignment, segment
from .grid import DigitalSegment, Point

DEFAULT_STEP = 0.001


@dataclass(frozen=True)
class HausdorffResult:
    value: float
    arg_point: Point
    sampling_step: float
    error_bound: float

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "arg_point": list(self.arg_point),
            "sampling_step": self.sampling_step,
            "error_bound": self.error_bound,
        }


def point_segment_distance(px: float, py: float, ax: float, ay: float, bx: float, by: float) -> float:
    dx, dy = bx - ax, by - ay
    length_sq = dx * dx + dy * dy
    if length_sq == 0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / length_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _samples_to_polyline(samples: np.ndarray, vertices: np.ndarray) -> np.ndarray:
    if len(vertices) == 1:
        return np.hypot(samples[:, 0] - vertices[0, 0], samples[:, 1] - vertices[0, 1])
    a = vertices[:-1]
    d = vertices[1:] - a  # unit edges, |d| == 1
    rel = samples[:, None, :] - a[None, :, :]
    t = np.clip(np.einsum("ske,ke->sk", rel, d), 0.0, 1.0)
    closest = a[None, :, :] + t[:, :, None] * d[None, :, :]
    dist = np.hypot(samples[:, None, 0] - closest[..., 0], samples[:, None, 1] - closest[..., 1])
    return dist.min(axis=1)


def hausdorff(seg: DigitalSegment, p: Point, q: Point, sampling_step: float = DEFAULT_STEP) -> HausdorffResult:
    p, q = Point(*p), Point(*q)
    if sampling_step <= 0:
        raise ValueError("sampling step must be positive")
    if seg.first != p or seg.last != q:
        raise ValueError("segment endpoints do not match p and q")
    # canonical direction so that swapping p and q is bit-for-bit symmetric
    pts = seg.points if seg.first <= seg.last else seg.points[::-1]
    a, b = (p, q) if p <= q else (q, p)

    best = -1.0
    arg = pts[0]
    for r in pts:
        dist = point_segment_distance(r.x, r.y, a.x, a.y, b.x, b.y)
        if dist > best:
            best, arg = dist, r

    length = math.hypot(b.x - a.x, b.y - a.y)
    n = max(1, math.ceil(length / sampling_step))
    t = np.linspace(0.0, 1.0, n + 1)
    samples = np.column_stack((a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    vertices = np.array(pts, dtype=float)
    sampled = max(
        float(_samples_to_polyline(samples[i:i + 4096], vertices).max())
        for i in range(0, len(samples), 4096)
    )

    return HausdorffResult(max(best, sampled), arg, sampling_step, sampling_step / 2)


def hausdorff_growth(
    assignment: OrderAssignment,
    p: Point,
    direction: tuple,
    n_values: Iterable[int],
    sampling_step: float = DEFAULT_STEP,
) -> list:
    """Rows ``(n, value, error_bound)`` for the segments from ``p`` to ``p + n * direction``."""
    p = Point(*p)
    dx, dy = direction
    rows = []
    for n in n_values:
        if n <= 0:
            raise ValueError("n values must be positive")
        q = Point(p.x + n * dx, p.y + n * dy)
        result = hausdorff(segment(assignment, p, q), p, q, sampling_step)
        rows.append((n, result.value, result.error_bound))
    return rows


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "value", "error_bound"])
    for n, value, bound in rows:
        writer.writerow([n, repr(value), repr(bound)])
    return buf.getvalue()
