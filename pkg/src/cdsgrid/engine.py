"""Digital segment generation from per-point order assignments.

Every point ``p`` carries two order specs.  ``order1(p)`` generates the
segments into ``p``'s first quadrant by the up/right walk.  ``order2(p)``
does the same for the second quadrant in mirrored coordinates, where the
walk starts from the antidiagonal ``-p.x + p.y``.  Third- and fourth-quadrant
segments are never walked; they are the reversal of the segment generated
from the other endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Tuple

from .grid import DigitalSegment, Point, Quadrant, classify_quadrant, mirror
from .orders import Natural, OrderSpec, WaterlineBelow, Window, partition_window, spec_from_json


class ProlongationError(RuntimeError):
    """Neither one-step extension of a segment contains it."""


@dataclass(frozen=True)
class Uniform:
    spec1: OrderSpec
    spec2: OrderSpec

    def order1(self, p: Point) -> OrderSpec:
        return self.spec1

    def order2(self, p: Point) -> OrderSpec:
        return self.spec2

    def to_json(self) -> dict:
        return {"kind": "uniform", "spec1": self.spec1.to_json(), "spec2": self.spec2.to_json()}


@dataclass(frozen=True)
class Waterline:
    """Natural order on and above the x-axis; below it, the order anchored at p.x.

    Second-quadrant orders are natural everywhere.
    """

    def order1(self, p: Point) -> OrderSpec:
        if p.y >= 0:
            return Natural()
        return WaterlineBelow(p.x)

    def order2(self, p: Point) -> OrderSpec:
        return Natural()

    def to_json(self) -> dict:
        return {"kind": "waterline"}


@dataclass(frozen=True)
class Table:
    default: Tuple[OrderSpec, OrderSpec]
    entries: Mapping[Point, Tuple[OrderSpec, OrderSpec]] = field(default_factory=dict)

    def order1(self, p: Point) -> OrderSpec:
        return self.entries.get(p, self.default)[0]

    def order2(self, p: Point) -> OrderSpec:
        return self.entries.get(p, self.default)[1]

    def to_json(self) -> dict:
        return {
            "kind": "table",
            "default": [self.default[0].to_json(), self.default[1].to_json()],
            "entries": [
                {"point": list(pt), "spec1": s1.to_json(), "spec2": s2.to_json()}
                for pt, (s1, s2) in sorted(self.entries.items())
            ],
        }


OrderAssignment = Uniform | Waterline | Table


def assignment_from_json(data) -> OrderAssignment:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("assignment must be an object with 'kind'")
    kind = data["kind"]
    if kind == "uniform":
        return Uniform(spec_from_json(data["spec1"]), spec_from_json(data["spec2"]))
    if kind == "waterline":
        return Waterline()
    if kind == "table":
        default = data["default"]
        if not isinstance(default, (list, tuple)) or len(default) != 2:
            raise ValueError("table default must be a pair of order specs")
        entries = {}
        for entry in data.get("entries", []):
            pt = Point.from_json(entry["point"])
            entries[pt] = (spec_from_json(entry["spec1"]), spec_from_json(entry["spec2"]))
        return Table((spec_from_json(default[0]), spec_from_json(default[1])), entries)
    raise ValueError(f"unknown assignment kind {kind!r}")


def first_quadrant_segment(p: Point, q: Point, spec: OrderSpec) -> DigitalSegment:
    """Walk from ``p`` up/right to ``q``.

    At a point with coordinate sum ``s`` the walk moves up iff ``s`` is among
    the ``q.y - p.y`` greatest integers of ``[p.x+p.y, q.x+q.y-1]`` under
    ``spec``.
    """
    p, q = Point(*p), Point(*q)
    if q.x < p.x or q.y < p.y:
        raise ValueError("not in closed first quadrant")
    if p == q:
        return DigitalSegment((p,))
    _, vertical = partition_window(spec, Window(p.sum, q.sum - 1), q.y - p.y)
    x, y = p
    points = [p]
    while (x, y) != q:
        if x + y in vertical:
            y += 1
        else:
            x += 1
        points.append(Point(x, y))
    return DigitalSegment(tuple(points))


def _straight(p: Point, q: Point) -> DigitalSegment:
    if p.x == q.x:
        step = 1 if q.y > p.y else -1
        return DigitalSegment(tuple(Point(p.x, y) for y in range(p.y, q.y + step, step)))
    step = 1 if q.x > p.x else -1
    return DigitalSegment(tuple(Point(x, p.y) for x in range(p.x, q.x + step, step)))


def _second_quadrant_segment(assignment: OrderAssignment, p: Point, q: Point) -> DigitalSegment:
    walked = first_quadrant_segment(mirror(p), mirror(q), assignment.order2(p))
    return walked.mirrored()


def segment(assignment: OrderAssignment, p: Point, q: Point) -> DigitalSegment:
    """The segment R_p(q): starts at ``p`` and ends at ``q``."""
    p, q = Point(*p), Point(*q)
    quad = classify_quadrant(p, q)
    if quad is Quadrant.EQUAL:
        return DigitalSegment((p,))
    if quad in (Quadrant.SAME_COLUMN, Quadrant.SAME_ROW):
        return _straight(p, q)
    if quad is Quadrant.Q1:
        return first_quadrant_segment(p, q, assignment.order1(p))
    if quad is Quadrant.Q3:
        return first_quadrant_segment(q, p, assignment.order1(q)).reversed()
    if quad is Quadrant.Q2:
        return _second_quadrant_segment(assignment, p, q)
    return _second_quadrant_segment(assignment, q, p).reversed()


def movement_sums(seg: DigitalSegment):
    """(horizontal, vertical) coordinate sums at which the path steps right / up."""
    first, last = seg.first, seg.last
    if last.x < first.x or last.y < first.y:
        raise ValueError("orientation: segment must run with x and y non-decreasing")
    horizontal = set()
    vertical = set()
    for a, b in zip(seg.points, seg.points[1:]):
        if b.x != a.x:
            horizontal.add(a.sum)
        else:
            vertical.add(a.sum)
    return frozenset(horizontal), frozenset(vertical)


def derived_third_quadrant_moves(seg: DigitalSegment):
    """Movement sums of the same path walked from its upper-right end.

    A step taken from sum ``a`` going up/right is taken from sum ``a + 1``
    going down/left, so both sets shift by one.
    """
    horizontal, vertical = movement_sums(seg)
    return frozenset(a + 1 for a in horizontal), frozenset(a + 1 for a in vertical)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def prolong(assignment: OrderAssignment, p: Point, q: Point) -> Point:
    """A neighbour ``r`` of ``q`` one step further from ``p`` whose segment contains R_p(q)."""
    p, q = Point(*p), Point(*q)
    if p == q:
        raise ValueError("prolongation needs p != q")
    sx = _sign(q.x - p.x)
    sy = _sign(q.y - p.y)
    candidates = []
    if sx:
        candidates.append(Point(q.x + sx, q.y))
    if sy:
        candidates.append(Point(q.x, q.y + sy))
    base = set(segment(assignment, p, q).points)
    for r in candidates:
        if base <= set(segment(assignment, p, r).points):
            return r
    raise ProlongationError(f"prolongation failure for R_{tuple(p)}({tuple(q)})")
