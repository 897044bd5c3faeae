"""Grid primitives: points, quadrant classification, mirroring and path checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class Point(NamedTuple):
    x: int
    y: int

    @property
    def sum(self) -> int:
        """Antidiagonal index x + y."""
        return self.x + self.y

    def to_json(self) -> list:
        return [self.x, self.y]

    @classmethod
    def from_json(cls, data) -> "Point":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"point must be a two-element array, got {data!r}")
        x, y = data
        if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
            raise ValueError(f"point coordinates must be integers, got {data!r}")
        return cls(x, y)

    @classmethod
    def parse(cls, text: str) -> "Point":
        """Parse ``"x,y"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'x,y', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


class Quadrant(enum.Enum):
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"
    SAME_COLUMN = "SameColumn"
    SAME_ROW = "SameRow"
    EQUAL = "Equal"


def classify_quadrant(p: Point, q: Point) -> Quadrant:
    """Where ``q`` lies relative to ``p``; axis pairs get their own tags."""
    if p == q:
        return Quadrant.EQUAL
    if q.x == p.x:
        return Quadrant.SAME_COLUMN
    if q.y == p.y:
        return Quadrant.SAME_ROW
    if q.x > p.x:
        return Quadrant.Q1 if q.y > p.y else Quadrant.Q4
    return Quadrant.Q2 if q.y > p.y else Quadrant.Q3


def mirror(p: Point) -> Point:
    return Point(-p.x, p.y)


@dataclass(frozen=True)
class DigitalSegment:
    """Ordered grid path from ``points[0]`` to ``points[-1]``."""

    points: tuple

    def __post_init__(self):
        if not self.points:
            raise ValueError("empty path")
        object.__setattr__(self, "points", tuple(Point(*pt) for pt in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    @property
    def first(self) -> Point:
        return self.points[0]

    @property
    def last(self) -> Point:
        return self.points[-1]

    def reversed(self) -> "DigitalSegment":
        return DigitalSegment(self.points[::-1])

    def mirrored(self) -> "DigitalSegment":
        return DigitalSegment(tuple(mirror(pt) for pt in self.points))

    def to_json(self) -> dict:
        return {"points": [pt.to_json() for pt in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> "DigitalSegment":
        if not isinstance(data, dict) or "points" not in data:
            raise ValueError("segment JSON needs a 'points' array")
        return cls(tuple(Point.from_json(pt) for pt in data["points"]))


@dataclass(frozen=True)
class PathReport:
    ok: bool
    index: Optional[int] = None
    message: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_path(points: Iterable[Sequence[int]]) -> PathReport:
    """Check the unit-step and coordinate-monotonicity invariants of a path.

    Reports the first defect with the index of the offending point.
    """
    pts = [Point(*pt) for pt in points]
    if not pts:
        raise ValueError("empty path")
    x_dir = 0
    y_dir = 0
    for i in range(1, len(pts)):
        dx = pts[i].x - pts[i - 1].x
        dy = pts[i].y - pts[i - 1].y
        if abs(dx) + abs(dy) != 1:
            return PathReport(False, i, f"non-unit step at index {i}")
        if dx:
            if x_dir and dx != x_dir:
                return PathReport(False, i, f"x not monotone at index {i}")
            x_dir = dx
        if dy:
            if y_dir and dy != y_dir:
                return PathReport(False, i, f"y not monotone at index {i}")
            y_dir = dy
    return PathReport(True)


def is_negative_slope(first: Point, last: Point) -> bool:
    """True when the endpoints differ strictly in both coordinates with opposite signs."""
    dx = last.x - first.x
    dy = last.y - first.y
    return dx * dy < 0
