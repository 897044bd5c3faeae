"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here shares code with the package beyond the Point type.
"""

from itertools import combinations

from cdsgrid.grid import Point


def lattice_paths(p, q):
    """Every up/right lattice path from p to q (q in the closed first quadrant of p)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = dx + dy
    for ups in combinations(range(n), dy):
        x, y = p
        pts = [Point(x, y)]
        for k in range(n):
            if k in ups:
                y += 1
            else:
                x += 1
            pts.append(Point(x, y))
        yield tuple(pts)


def rank_walk(p, q, ranking):
    """First-quadrant path from p to q, chosen among all lattice paths.

    ``ranking`` lists the window values in ascending order.  The path whose
    up-steps sit exactly at the dy highest-ranked sums is returned.
    """
    dy = q[1] - p[1]
    window = [v for v in ranking if p[0] + p[1] <= v < q[0] + q[1]]
    ups = set(window[len(window) - dy:]) if dy else set()
    matches = []
    for path in lattice_paths(p, q):
        up_sums = {a.x + a.y for a, b in zip(path, path[1:]) if b.y != a.y}
        if up_sums == ups:
            matches.append(path)
    assert len(matches) == 1
    return matches[0]


def witness_pairs(a, b):
    """All (t1, t2) common to both paths, adjacent among common points along a, with a gap between."""
    common = [i for i, pt in enumerate(a) if pt in set(b)]
    return [(a[i], a[j]) for i, j in zip(common, common[1:]) if j > i + 1]


def naive_bad_pair(top, bottom, shift):
    """Scan every line and every (a, b) directly from positions."""
    pos_top = {v: i for i, v in enumerate(top)}
    pos_bottom = {v: shift + j for j, v in enumerate(bottom)}
    shared = sorted(set(top) & set(bottom))
    for line in range(1, len(top)):
        cut = line - shift
        if not 1 <= cut <= len(bottom) - 1:
            continue
        a_side = [v for v in shared if pos_top[v] < line <= pos_bottom[v]]
        b_side = [v for v in shared if pos_bottom[v] < line <= pos_top[v]]
        if a_side and b_side:
            return line, min(a_side), min(b_side)
    return None


def naive_profile(s1, s2):
    """(sum, dist) for every antidiagonal both paths cross; plain double loop."""
    out = []
    for r in s1:
        for s in s2:
            if r.x + r.y == s.x + s.y:
                out.append((r.x + r.y, r.x - s.x))
    return sorted(out)


def is_monotone(values):
    inc = all(a <= b for a, b in zip(values, values[1:]))
    dec = all(a >= b for a, b in zip(values, values[1:]))
    return inc or dec
