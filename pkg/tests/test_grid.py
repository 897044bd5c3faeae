import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdsgrid.grid import DigitalSegment, Point, Quadrant, classify_quadrant, is_negative_slope, mirror, validate_path

coords = st.integers(-50, 50)
points = st.builds(Point, coords, coords)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ((0, 0), (3, 5), Quadrant.Q1),
        ((0, 0), (-2, 4), Quadrant.Q2),
        ((0, 0), (-2, -4), Quadrant.Q3),
        ((0, 0), (2, -4), Quadrant.Q4),
        ((1, 1), (1, -5), Quadrant.SAME_COLUMN),
        ((1, 1), (7, 1), Quadrant.SAME_ROW),
        ((4, 4), (4, 4), Quadrant.EQUAL),
    ],
)
def test_classify_quadrant(p, q, expected):
    assert classify_quadrant(Point(*p), Point(*q)) is expected


@given(points, points)
def test_quadrant_matches_signs(p, q):
    dx, dy = q.x - p.x, q.y - p.y
    quad = classify_quadrant(p, q)
    if dx == 0 and dy == 0:
        assert quad is Quadrant.EQUAL
    elif dx == 0:
        assert quad is Quadrant.SAME_COLUMN
    elif dy == 0:
        assert quad is Quadrant.SAME_ROW
    else:
        expected = {(1, 1): Quadrant.Q1, (-1, 1): Quadrant.Q2, (-1, -1): Quadrant.Q3, (1, -1): Quadrant.Q4}
        assert quad is expected[(dx > 0) - (dx < 0), (dy > 0) - (dy < 0)]


def test_mirror_examples():
    assert mirror(Point(3, 5)) == (-3, 5)
    assert mirror(Point(0, 2)) == (0, 2)
    assert mirror(mirror(Point(-7, 4))) == (-7, 4)


@given(points)
def test_mirror_is_involution(p):
    assert mirror(mirror(p)) == p


def test_validate_path_examples():
    assert validate_path([(0, 0), (1, 0), (1, 1)]).ok
    report = validate_path([(0, 0), (1, 1)])
    assert not report.ok and report.message == "non-unit step at index 1"
    report = validate_path([(0, 0), (1, 0), (0, 0)])
    assert not report.ok and report.message == "x not monotone at index 2"
    report = validate_path([(0, 0), (0, 1), (0, 0)])
    assert report.message == "y not monotone at index 2"
    assert validate_path([(5, 5)]).ok


def test_validate_path_rejects_empty():
    with pytest.raises(ValueError, match="empty path"):
        validate_path([])


@given(points, st.lists(st.sampled_from([(1, 0), (0, 1)]), max_size=30), st.booleans(), st.booleans())
def test_random_staircases_are_valid(start, steps, flip_x, flip_y):
    pts = [start]
    for dx, dy in steps:
        last = pts[-1]
        pts.append(Point(last.x + (-dx if flip_x else dx), last.y + (-dy if flip_y else dy)))
    assert validate_path(pts).ok


def test_segment_basics():
    seg = DigitalSegment((Point(0, 0), Point(1, 0), Point(1, 1)))
    assert seg.first == (0, 0) and seg.last == (1, 1)
    assert seg.reversed().points == (Point(1, 1), Point(1, 0), Point(0, 0))
    assert seg.mirrored().points == (Point(0, 0), Point(-1, 0), Point(-1, 1))
    assert DigitalSegment.from_json(seg.to_json()) == seg
    with pytest.raises(ValueError, match="empty path"):
        DigitalSegment(())


def test_point_parsing():
    assert Point.parse("-2,3") == (-2, 3)
    assert Point.from_json([4, -1]) == (4, -1)
    with pytest.raises(ValueError):
        Point.from_json([1.5, 2])
    with pytest.raises(ValueError):
        Point.parse("1;2")


def test_negative_slope():
    assert is_negative_slope(Point(0, 0), Point(-2, 3))
    assert not is_negative_slope(Point(0, 0), Point(2, 3))
    assert not is_negative_slope(Point(0, 0), Point(0, 3))
