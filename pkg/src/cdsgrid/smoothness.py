"""Antidiagonal distance between segments, smoothness and order agreement."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .consistency import Region, check_region_cap
from .engine import OrderAssignment, segment
from .grid import DigitalSegment, Point, is_negative_slope, mirror
from .orders import OrderSpec, compare

MAX_AGREEMENT_WINDOW = 256


@dataclass(frozen=True)
class ProfileEntry:
    sum: int
    r: Point
    dist: int


@dataclass(frozen=True)
class DistProfile:
    entries: tuple

    @property
    def dists(self) -> list:
        return [e.dist for e in self.entries]

    def to_json(self) -> dict:
        return {"entries": [{"sum": e.sum, "r": list(e.r), "dist": e.dist} for e in self.entries]}


@dataclass(frozen=True)
class SmoothVerdict:
    smooth: bool
    triple: Optional[tuple] = None  # three ProfileEntry

    def to_json(self) -> dict:
        out = {"smooth": self.smooth}
        if self.triple is not None:
            out["triple"] = [{"sum": e.sum, "r": list(e.r), "dist": e.dist} for e in self.triple]
        return out


def _oriented(points: tuple) -> tuple:
    return points if points[0] <= points[-1] else points[::-1]


def dist_profile(s1: DigitalSegment, s2: DigitalSegment) -> DistProfile:
    """Signed x-offset from ``s2`` to ``s1`` on every antidiagonal both cross.

    Negative-slope pairs are measured in mirrored coordinates; the reported
    points stay in the original frame.
    """
    neg1 = is_negative_slope(s1.first, s1.last)
    neg2 = is_negative_slope(s2.first, s2.last)
    if neg1 != neg2:
        raise ValueError("slope classes differ")
    a, b = s1.points, s2.points
    if neg1:
        a = tuple(mirror(pt) for pt in a)
        b = tuple(mirror(pt) for pt in b)
    by_sum = {pt.x + pt.y: pt for pt in b}
    entries = []
    for pt in _oriented(a):
        other = by_sum.get(pt.x + pt.y)
        if other is None:
            continue
        r = mirror(pt) if neg1 else pt
        entries.append(ProfileEntry(pt.x + pt.y, r, pt.x - other.x))
    return DistProfile(tuple(entries))


def _violating_triple(entries: tuple) -> Optional[tuple]:
    d = [e.dist for e in entries]
    steps = [(d[i + 1] > d[i]) - (d[i + 1] < d[i]) for i in range(len(d) - 1)]
    direction = next((s for s in steps if s), 0)
    if not direction:
        return None
    flip = next((k for k, s in enumerate(steps) if s == -direction), None)
    if flip is None:
        return None
    mid = flip
    while mid > 0 and d[mid - 1] == d[mid]:
        mid -= 1
    high = len(d) - 1
    if (d[high] - d[mid]) * direction >= 0:
        high = flip + 1
    return entries[0], entries[mid], entries[high]


def is_smooth_pair(s1: DigitalSegment, s2: DigitalSegment) -> SmoothVerdict:
    """Smooth iff the distance profile is non-decreasing or non-increasing."""
    triple = _violating_triple(dist_profile(s1, s2).entries)
    return SmoothVerdict(triple is None, triple)


def disagreement_from_pair(s1: DigitalSegment, s2: DigitalSegment) -> Optional[tuple]:
    """Read an order disagreement off a non-smooth pair.

    Returns ``(u, w)`` where ``s1`` steps right at ``u`` and up at ``w``
    while ``s2`` does the opposite, so the generating order of ``s1`` puts
    u before w and that of ``s2`` puts w before u.  Sums are in the frame
    the profile is measured in.
    """
    entries = dist_profile(s1, s2).entries
    d = [e.dist for e in entries]
    sums = [e.sum for e in entries]
    first = None
    for i in range(len(d) - 1):
        step = d[i + 1] - d[i]
        if not step:
            continue
        if first is None:
            first = (step, sums[i])
        elif step == -first[0]:
            if first[0] > 0:
                return first[1], sums[i]
            return sums[i], first[1]
    return None


@dataclass(frozen=True)
class AgreementVerdict:
    agree: bool
    counterexample: Optional[tuple] = None

    def to_json(self) -> dict:
        return {"agree": self.agree, "counterexample": list(self.counterexample) if self.counterexample else None}


def in_agreement(p1: Point, spec1: OrderSpec, p2: Point, spec2: OrderSpec, window_length: int) -> AgreementVerdict:
    """Compare the two orders on every pair in ``[L, L + window_length]``.

    ``L`` is the larger of the two base sums.  The counterexample is the
    lexicographically smallest disagreeing pair.
    """
    if window_length < 1:
        raise ValueError("window length must be positive")
    if window_length > MAX_AGREEMENT_WINDOW:
        raise ValueError(f"window length above cap {MAX_AGREEMENT_WINDOW}")
    lo = max(p1[0] + p1[1], p2[0] + p2[1])
    if spec1 == spec2:
        return AgreementVerdict(True)
    values = range(lo, lo + window_length + 1)
    for a in values:
        for b in range(a + 1, lo + window_length + 1):
            if compare(spec1, a, b) != compare(spec2, a, b):
                return AgreementVerdict(False, (a, b))
    return AgreementVerdict(True)


# --- region sweeps -----------------------------------------------------------


def _region_segments(assignment: OrderAssignment, region: Region, margin: int):
    """Segments generated by the orders of region points, split by slope class.

    Nonnegative class: R_p(q) for q in the closed first quadrant of p.
    Negative class: R_p(q) for q in the open second quadrant of p.
    Targets range over the region grown by ``margin``.
    """
    box = region.expanded(margin)
    nonneg, neg = [], []
    for p in region.points():
        for q in box.points():
            if q == p:
                continue
            if q.x >= p.x and q.y >= p.y:
                nonneg.append(segment(assignment, p, q))
            elif q.x < p.x and q.y > p.y:
                neg.append(segment(assignment, p, q))
    return nonneg, neg


def _step_masks(segs: list, frame_of):
    """Bit masks of right-step and up-step sums per segment, as uint64 words."""
    walked = [frame_of(s) for s in segs]
    lo = min(pts[0].x + pts[0].y for pts in walked)
    hi = max(pts[-1].x + pts[-1].y for pts in walked)
    n_words = (hi - lo) // 64 + 1
    horizontal = np.zeros((len(segs), n_words), dtype=np.uint64)
    vertical = np.zeros((len(segs), n_words), dtype=np.uint64)
    for i, pts in enumerate(walked):
        for a, b in zip(pts, pts[1:]):
            bit = a.x + a.y - lo
            target = horizontal if b.x != a.x else vertical
            target[i, bit // 64] |= np.uint64(1) << np.uint64(bit % 64)
    return horizontal, vertical


def _nonneg_frame(seg: DigitalSegment) -> tuple:
    return _oriented(seg.points)


def _neg_frame(seg: DigitalSegment) -> tuple:
    return _oriented(tuple(mirror(pt) for pt in seg.points))


def _nonsmooth_pairs(segs: list, frame_of) -> np.ndarray:
    """Codes ``i * len(segs) + j`` (``i < j``, ascending) of pairs whose profile both rises and falls.

    Along a common antidiagonal range the distance steps +1 where the first
    path goes right and the second up, and -1 for the reverse; a pair is
    non-smooth iff both kinds of step occur.
    """
    n = len(segs)
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    horizontal, vertical = _step_masks(segs, frame_of)
    chunks = []
    for i in range(n - 1):
        rise = np.any((horizontal[i] & vertical[i + 1:]) != 0, axis=1)
        fall = np.any((vertical[i] & horizontal[i + 1:]) != 0, axis=1)
        hits = np.flatnonzero(rise & fall)
        if hits.size:
            chunks.append(i * n + i + 1 + hits.astype(np.int64))
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)


@dataclass(frozen=True)
class _FlaggedClass:
    index: dict  # points tuple -> position in the class list
    codes: np.ndarray

    def contains(self, a: tuple, b: tuple) -> bool:
        i, j = self.index.get(a), self.index.get(b)
        if i is None or j is None or i == j:
            return False
        i, j = min(i, j), max(i, j)
        code = i * len(self.index) + j
        k = int(np.searchsorted(self.codes, code))
        return k < len(self.codes) and int(self.codes[k]) == code


@dataclass(frozen=True)
class SmoothRegionReport:
    smooth: bool
    pairs_checked: int
    nonsmooth_count: int
    exhibit: Optional[tuple] = None  # (seg1, seg2, SmoothVerdict)
    flagged: tuple = field(default=(), repr=False, compare=False)

    def contains(self, s1: DigitalSegment, s2: DigitalSegment) -> bool:
        """Whether the sweep flagged this pair (in either order) as non-smooth."""
        return any(c.contains(s1.points, s2.points) for c in self.flagged)

    def to_json(self) -> dict:
        out = {"smooth": self.smooth, "pairs_checked": self.pairs_checked, "nonsmooth_count": self.nonsmooth_count}
        if self.exhibit is not None:
            s1, s2, verdict = self.exhibit
            out["exhibit"] = {"segments": [s1.to_json(), s2.to_json()], **verdict.to_json()}
        return out


def is_smooth_region(
    assignment: OrderAssignment, region: Region, margin: int = 0, max_side: Optional[int] = None
) -> SmoothRegionReport:
    """Check every same-class pair among the region's segments.

    With ``margin`` 0 this covers every segment with both endpoints in the
    region; a positive margin lets far endpoints leave the region.
    """
    check_region_cap(region, max_side)
    nonneg, neg = _region_segments(assignment, region, margin)
    total = 0
    exhibit = None
    checked = 0
    flagged = []
    for segs, frame in ((nonneg, _nonneg_frame), (neg, _neg_frame)):
        n = len(segs)
        checked += n * (n - 1) // 2
        codes = _nonsmooth_pairs(segs, frame)
        total += len(codes)
        flagged.append(_FlaggedClass({seg.points: k for k, seg in enumerate(segs)}, codes))
        if exhibit is None and len(codes):
            i, j = divmod(int(codes[0]), n)
            verdict = is_smooth_pair(segs[i], segs[j])
            assert not verdict.smooth, "mask sweep and profile disagree"
            exhibit = (segs[i], segs[j], verdict)
    return SmoothRegionReport(total == 0, checked, total, exhibit, tuple(flagged))


@dataclass(frozen=True)
class AgreementSmoothnessReport:
    agreement_all: bool
    smooth_all: bool
    disagreement: Optional[tuple] = None  # (quadrant tag, p1, p2, (a, b))
    exhibit: Optional[tuple] = None  # (seg1, seg2, SmoothVerdict)
    exhibit_disagreement: Optional[tuple] = None  # (u, w) read off the exhibit
    region_report: Optional[SmoothRegionReport] = field(default=None, repr=False, compare=False)

    @property
    def consistent(self) -> bool:
        return self.agreement_all == self.smooth_all

    def to_json(self) -> dict:
        out = {"agreement_all": self.agreement_all, "smooth_all": self.smooth_all, "consistent": self.consistent}
        if self.disagreement is not None:
            tag, p1, p2, pair = self.disagreement
            out["disagreement"] = {"orders": tag, "p1": list(p1), "p2": list(p2), "pair": list(pair)}
        if self.exhibit is not None:
            s1, s2, verdict = self.exhibit
            out["exhibit"] = {"segments": [s1.to_json(), s2.to_json()], **verdict.to_json()}
        if self.exhibit_disagreement is not None:
            out["exhibit_disagreement"] = list(self.exhibit_disagreement)
        return out


def agreement_sweep(assignment: OrderAssignment, region: Region, window_length: int) -> Optional[tuple]:
    """First disagreeing point pair in the region, checking both order families."""
    pts = region.points()
    for i, p1 in enumerate(pts):
        for p2 in pts[i + 1:]:
            verdict = in_agreement(p1, assignment.order1(p1), p2, assignment.order1(p2), window_length)
            if not verdict.agree:
                return ("order1", p1, p2, verdict.counterexample)
            m1, m2 = mirror(p1), mirror(p2)
            verdict = in_agreement(m1, assignment.order2(p1), m2, assignment.order2(p2), window_length)
            if not verdict.agree:
                return ("order2", p1, p2, verdict.counterexample)
    return None


def agreement_smoothness_check(
    assignment: OrderAssignment,
    region: Region,
    window_length: int,
    margin: Optional[int] = None,
    max_side: Optional[int] = None,
) -> AgreementSmoothnessReport:
    """Agreement of all region orders versus smoothness of all region segments.

    The smoothness side lets segment targets leave the region by ``margin``
    (default ``window_length``).
    """
    check_region_cap(region, max_side)
    margin = window_length if margin is None else margin
    disagreement = agreement_sweep(assignment, region, window_length)
    smooth = is_smooth_region(assignment, region, margin=margin, max_side=max_side)
    exhibit_pair = None
    if smooth.exhibit is not None:
        exhibit_pair = disagreement_from_pair(smooth.exhibit[0], smooth.exhibit[1])
    return AgreementSmoothnessReport(disagreement is None, smooth.smooth, disagreement, smooth.exhibit, exhibit_pair, smooth)
