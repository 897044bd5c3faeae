"""Consistency checks for order assignments.

Three certificates of the same defect live here:

* a *witness* ``(t1, t2)``: two segments split at ``t1`` and meet again at ``t2``;
* a *bad pair* ``{a, b}``: two order-sorted windows, laid out one above the
  other with a horizontal shift, that one vertical dividing line splits in
  opposite directions;
* a *conflicting priority*: two segments into a common apex that force
  contradictory orderings on the apex's implicit third-quadrant order.

All searches are deterministic and return the smallest certificate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .engine import (
    OrderAssignment,
    ProlongationError,
    derived_third_quadrant_moves,
    first_quadrant_segment,
    prolong,
    segment,
)
from .grid import DigitalSegment, Point, is_negative_slope, mirror, validate_path
from .orders import OrderSpec, Window, sorted_window

PROPERTIES = ("S1", "S2", "S3", "S4", "S5")
DEFAULT_MAX_SIDE = 17


class RegionCapError(ValueError):
    pass


@dataclass(frozen=True)
class Region:
    x0: int
    x1: int
    y0: int
    y1: int

    def __post_init__(self):
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError("empty region")

    @classmethod
    def parse(cls, text: str) -> "Region":
        """Parse ``"x0:x1,y0:y1"``."""
        try:
            xs, ys = text.split(",")
            x0, x1 = (int(v) for v in xs.split(":"))
            y0, y1 = (int(v) for v in ys.split(":"))
        except ValueError:
            raise ValueError(f"region must look like 'x0:x1,y0:y1', got {text!r}") from None
        return cls(x0, x1, y0, y1)

    @classmethod
    def square(cls, lo: int, hi: int) -> "Region":
        return cls(lo, hi, lo, hi)

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    def points(self) -> list:
        return [Point(x, y) for x in range(self.x0, self.x1 + 1) for y in range(self.y0, self.y1 + 1)]

    def expanded(self, margin: int) -> "Region":
        return Region(self.x0 - margin, self.x1 + margin, self.y0 - margin, self.y1 + margin)

    def __contains__(self, p) -> bool:
        return self.x0 <= p[0] <= self.x1 and self.y0 <= p[1] <= self.y1

    def to_json(self) -> dict:
        return {"x0": self.x0, "x1": self.x1, "y0": self.y0, "y1": self.y1}


def max_region_side() -> int:
    value = os.environ.get("CDS_MAX_REGION")
    return int(value) if value else DEFAULT_MAX_SIDE


def check_region_cap(region: Region, max_side: Optional[int] = None) -> None:
    cap = max_region_side() if max_side is None else max_side
    if region.width > cap or region.height > cap:
        raise RegionCapError(
            f"region cap exceeded: {region.width}x{region.height} > {cap}x{cap}"
        )


# --- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    t1: Point
    t2: Point

    def to_json(self) -> dict:
        return {"t1": list(self.t1), "t2": list(self.t2)}


def _canonical(points: tuple) -> tuple:
    return points if points[0] <= points[-1] else points[::-1]


def find_witness(s1: DigitalSegment, s2: DigitalSegment) -> Optional[Witness]:
    """First place where the two paths split apart and later meet again.

    Paths are read lower-left end first (in mirrored coordinates when both
    have negative slope); ``t2`` is the earliest re-meeting point along the
    first path.
    """
    a, b = s1.points, s2.points
    flip = is_negative_slope(a[0], a[-1]) and is_negative_slope(b[0], b[-1])
    if flip:
        a = tuple(mirror(pt) for pt in a)
        b = tuple(mirror(pt) for pt in b)
    a = _canonical(a)
    common = set(a).intersection(b)
    last = None
    for i, pt in enumerate(a):
        if pt not in common:
            continue
        if last is not None and i > last + 1:
            t1, t2 = a[last], pt
            if flip:
                t1, t2 = mirror(t1), mirror(t2)
            return Witness(t1, t2)
        last = i
    return None


# --- layout view and bad pairs ----------------------------------------------


@dataclass(frozen=True)
class LayoutView:
    """Two order-sorted windows ending at ``end_sum``, the bottom one shifted right."""

    base_sum1: int
    base_sum2: int
    shift: int
    top_row: tuple
    bottom_row: tuple
    end_sum: int

    def to_json(self) -> dict:
        return {
            "base_sum1": self.base_sum1,
            "base_sum2": self.base_sum2,
            "shift": self.shift,
            "top_row": list(self.top_row),
            "bottom_row": list(self.bottom_row),
            "end_sum": self.end_sum,
        }


def layout_view(p1: Point, spec1: OrderSpec, p2: Point, spec2: OrderSpec, end_sum: int) -> LayoutView:
    p1, p2 = Point(*p1), Point(*p2)
    if p1.x > p2.x:
        raise ValueError("layout view needs p1.x <= p2.x")
    if end_sum < p1.sum or end_sum < p2.sum:
        raise ValueError("empty row")
    top = sorted_window(spec1, Window(p1.sum, end_sum))
    bottom = sorted_window(spec2, Window(p2.sum, end_sum))
    return LayoutView(p1.sum, p2.sum, p2.x - p1.x, tuple(top), tuple(bottom), end_sum)


def bad_pair_at_line(view: LayoutView, line_pos: int) -> Optional[tuple]:
    """Smallest ``(a, b)`` with a left/b right of the line on top and the reverse below.

    ``line_pos`` counts the top-row elements strictly left of the line.
    """
    n_top = len(view.top_row)
    n_bottom = len(view.bottom_row)
    bottom_cut = line_pos - view.shift
    if not (1 <= line_pos <= n_top - 1 and 1 <= bottom_cut <= n_bottom - 1):
        raise ValueError(f"line position {line_pos} out of range")
    top_left = set(view.top_row[:line_pos])
    top_right = set(view.top_row[line_pos:])
    bottom_left = set(view.bottom_row[:bottom_cut])
    bottom_right = set(view.bottom_row[bottom_cut:])
    a_side = top_left & bottom_right
    b_side = top_right & bottom_left
    if not a_side or not b_side:
        return None
    return min(a_side), min(b_side)


def _first_splitting_line(view: LayoutView) -> Optional[int]:
    # A value v sitting further left on top than below is an 'a' candidate for
    # every line strictly right of its top slot and at or left of its bottom
    # slot; the reverse gives 'b' candidates.  Sweep both coverage counts.
    shift = view.shift
    bottom_pos = {v: shift + j for j, v in enumerate(view.bottom_row)}
    width = max(len(view.top_row), shift + len(view.bottom_row)) + 2
    a_cov = [0] * width
    b_cov = [0] * width
    for i, v in enumerate(view.top_row):
        j = bottom_pos.get(v)
        if j is None or i == j:
            continue
        if i < j:
            a_cov[i + 1] += 1
            a_cov[j + 1] -= 1
        else:
            b_cov[j + 1] += 1
            b_cov[i + 1] -= 1
    a_run = b_run = 0
    for line in range(width):
        a_run += a_cov[line]
        b_run += b_cov[line]
        if a_run and b_run:
            return line
    return None


@dataclass(frozen=True)
class BadPairFinding:
    a: int
    b: int
    end_sum: int
    line_pos: int
    p3: Point

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "end_sum": self.end_sum, "line_pos": self.line_pos, "p3": list(self.p3)}


def find_bad_pair(
    p1: Point, spec1: OrderSpec, p2: Point, spec2: OrderSpec, max_end_sum: int
) -> Optional[BadPairFinding]:
    """Scan end sums upward and return the first bad pair, if any.

    Points are swapped so the left one forms the top row.  ``p3`` is the apex
    on antidiagonal ``end_sum + 1`` whose dividing line splits the pair.
    """
    p1, p2 = Point(*p1), Point(*p2)
    if p1.x > p2.x:
        p1, spec1, p2, spec2 = p2, spec2, p1, spec1
    if max_end_sum < p1.sum or max_end_sum < p2.sum:
        raise ValueError("max end sum below a base sum")
    if spec1 == spec2:
        # a bad pair needs the two orders to disagree on it
        return None
    for end_sum in range(max(p1.sum, p2.sum), max_end_sum + 1):
        view = layout_view(p1, spec1, p2, spec2, end_sum)
        line = _first_splitting_line(view)
        if line is None:
            continue
        a, b = bad_pair_at_line(view, line)
        p3 = Point(p1.x + line, end_sum + 1 - p1.x - line)
        return BadPairFinding(a, b, end_sum, line, p3)
    return None


# --- conflicting priorities --------------------------------------------------


def conflicting_priorities(
    p1: Point, spec1: OrderSpec, p2: Point, spec2: OrderSpec, p3: Point
) -> Optional[tuple]:
    """A pair ``(u, v)`` that R_{p1}(p3) ranks u over v and R_{p2}(p3) ranks v over u.

    Priorities are read on the apex side, i.e. on movement sums shifted by
    one, and restricted to the shifted common window.
    """
    p1, p2, p3 = Point(*p1), Point(*p2), Point(*p3)
    for p in (p1, p2):
        if not (p3.x > p.x and p3.y > p.y):
            raise ValueError("p3 not in open common quadrant")
    lo = max(p1.sum, p2.sum) + 1
    hi = p3.sum
    h1, v1 = derived_third_quadrant_moves(first_quadrant_segment(p1, p3, spec1))
    h2, v2 = derived_third_quadrant_moves(first_quadrant_segment(p2, p3, spec2))
    in_window = set(range(lo, hi + 1))
    over = v1 & h2 & in_window
    under = h1 & v2 & in_window
    if not over or not under:
        return None
    return min(over), min(under)


# --- region verification -----------------------------------------------------


@dataclass(frozen=True)
class Violation:
    property: str
    points: tuple
    certificate: dict

    def to_json(self) -> dict:
        out = {"property": self.property, "points": [list(p) for p in self.points]}
        out.update(self.certificate)
        return out


@dataclass
class PropertyReport:
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def witnesses(self) -> list:
        return [Witness(Point(*v.certificate["witness"]["t1"]), Point(*v.certificate["witness"]["t2"]))
                for v in self.violations if "witness" in v.certificate]

    def to_json(self) -> dict:
        return {"checked": dict(self.checked), "violations": [v.to_json() for v in self.violations]}


class _SegmentCache:
    def __init__(self, assignment: OrderAssignment):
        self.assignment = assignment
        self._cache = {}

    def __call__(self, p: Point, q: Point) -> DigitalSegment:
        key = (p, q)
        seg = self._cache.get(key)
        if seg is None:
            seg = segment(self.assignment, p, q)
            self._cache[key] = seg
        return seg


def _check_shape(seg: DigitalSegment, p: Point, q: Point) -> Optional[str]:
    report = validate_path(seg.points)
    if not report.ok:
        return report.message
    if seg.first != p or seg.last != q:
        return "endpoints do not match"
    if len(seg) != abs(q.x - p.x) + abs(q.y - p.y) + 1:
        return "length does not match endpoints"
    return None


def _subsegment_violation(seg: DigitalSegment, seg_of) -> Optional[tuple]:
    pts = seg.points
    members = set(pts)
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            sub = seg_of(pts[i], pts[j])
            if sub.points == pts[i:j + 1]:
                continue
            if not members.issuperset(sub.points):
                return pts[i], pts[j], sub
    return None


def verify_region(
    assignment: OrderAssignment,
    region: Region,
    properties: Iterable[str] = PROPERTIES,
    max_side: Optional[int] = None,
) -> PropertyReport:
    """Exhaustively check the axioms for every segment with both endpoints in ``region``.

    S3 is checked in its subsegment form: for each segment R_p(q) and every
    r, s on it, R_r(s) must lie inside R_p(q).  Each failure carries the
    witness between the two paths.  Prolongation candidates may leave the
    region.
    """
    props = tuple(sorted(set(properties)))
    unknown = set(props) - set(PROPERTIES)
    if unknown:
        raise ValueError(f"unknown properties: {sorted(unknown)}")
    check_region_cap(region, max_side)
    seg_of = _SegmentCache(assignment)
    pts = region.points()
    report = PropertyReport(checked={prop: 0 for prop in props})
    checked = report.checked
    found = report.violations

    for p, q in product(pts, pts):
        seg = seg_of(p, q)
        if "S1" in props:
            checked["S1"] += 1
            defect = _check_shape(seg, p, q)
            if defect:
                found.append(Violation("S1", (p, q), {"defect": defect}))
        if "S5" in props and (p.x == q.x or p.y == q.y):
            checked["S5"] += 1
            if p.x == q.x and any(r.x != p.x for r in seg):
                found.append(Violation("S5", (p, q), {"defect": "column segment leaves its column"}))
            elif p.y == q.y and any(r.y != p.y for r in seg):
                found.append(Violation("S5", (p, q), {"defect": "row segment leaves its row"}))
        if p >= q:
            continue
        if "S2" in props:
            checked["S2"] += 1
            if seg.points != seg_of(q, p).points[::-1]:
                found.append(Violation("S2", (p, q), {"defect": "R_p(q) is not the reverse of R_q(p)"}))
        if "S3" in props:
            checked["S3"] += 1
            hit = _subsegment_violation(seg, seg_of)
            if hit is not None:
                r, s, sub = hit
                cert = {"subsegment": [list(r), list(s)]}
                witness = find_witness(seg, sub)
                if witness is not None:
                    cert["witness"] = witness.to_json()
                found.append(Violation("S3", (p, q, r, s), cert))

    if "S4" in props:
        for p, q in product(pts, pts):
            if p == q:
                continue
            checked["S4"] += 1
            try:
                prolong(assignment, p, q)
            except ProlongationError:
                found.append(Violation("S4", (p, q), {"defect": "prolongation failure"}))

    found.sort(key=lambda v: (v.property, v.points))
    return report


# --- equivalence of the three certificates -----------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    bad_pair: Optional[BadPairFinding]
    conflict: Optional[tuple]  # (p3, (u, v))
    witness: Optional[tuple]  # (q1, q2, Witness)

    @property
    def consistent(self) -> bool:
        present = [self.bad_pair is not None, self.conflict is not None, self.witness is not None]
        return all(present) or not any(present)

    def to_json(self) -> dict:
        return {
            "bad_pair": self.bad_pair.to_json() if self.bad_pair else None,
            "conflict": (
                {"p3": list(self.conflict[0]), "u": self.conflict[1][0], "v": self.conflict[1][1]}
                if self.conflict else None
            ),
            "witness": (
                {"q1": list(self.witness[0]), "q2": list(self.witness[1]), **self.witness[2].to_json()}
                if self.witness else None
            ),
            "consistent": self.consistent,
        }


def _apex_candidates(p1: Point, p2: Point, max_sum: int) -> list:
    x_min = max(p1.x, p2.x) + 1
    y_min = max(p1.y, p2.y) + 1
    out = []
    for total in range(x_min + y_min, max_sum + 1):
        for x in range(x_min, total - y_min + 1):
            out.append(Point(x, total - x))
    return out


def _closed_quadrant_targets(p: Point, max_sum: int) -> list:
    out = []
    for total in range(p.sum, max_sum + 1):
        for x in range(p.x, p.x + total - p.sum + 1):
            out.append(Point(x, total - x))
    return out


def search_conflict(p1, spec1, p2, spec2, max_end_sum: int) -> Optional[tuple]:
    for p3 in _apex_candidates(Point(*p1), Point(*p2), max_end_sum + 1):
        uv = conflicting_priorities(p1, spec1, p2, spec2, p3)
        if uv is not None:
            return p3, uv
    return None


def search_witness(p1, spec1, p2, spec2, max_end_sum: int) -> Optional[tuple]:
    """Brute force over every pair of first-quadrant segments from ``p1`` and ``p2``."""
    p1, p2 = Point(*p1), Point(*p2)
    segs1 = [(q, first_quadrant_segment(p1, q, spec1)) for q in _closed_quadrant_targets(p1, max_end_sum + 1)]
    segs2 = [(q, first_quadrant_segment(p2, q, spec2)) for q in _closed_quadrant_targets(p2, max_end_sum + 1)]
    for q1, s1 in segs1:
        pts1 = set(s1.points)
        for q2, s2 in segs2:
            if len(pts1.intersection(s2.points)) < 2:
                continue
            w = find_witness(s1, s2)
            if w is not None:
                return q1, q2, w
    return None


def equivalence_check(p1, spec1, p2, spec2, max_end_sum: int) -> EquivalenceReport:
    """Run the bad-pair, conflicting-priority and witness searches on one order pair."""
    return EquivalenceReport(
        find_bad_pair(p1, spec1, p2, spec2, max_end_sum),
        search_conflict(p1, spec1, p2, spec2, max_end_sum),
        search_witness(p1, spec1, p2, spec2, max_end_sum),
    )
