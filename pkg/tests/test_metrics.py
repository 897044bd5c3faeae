import math

import pytest
import shapely
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from shapely.geometry import LineString

from cdsgrid.engine import Uniform, Waterline, first_quadrant_segment, segment
from cdsgrid.grid import Point
from cdsgrid.metrics import hausdorff, hausdorff_growth, point_segment_distance, rows_to_csv
from cdsgrid.orders import ExplicitWindow, Natural

NATURAL = Uniform(Natural(), Natural())
STAIRCASE = ExplicitWindow(0, 7, [3, 7, 5, 2, 1, 0, 4, 6])


def shapely_hausdorff(seg):
    """Densified Hausdorff distance between the path polyline and the chord."""
    path = LineString([tuple(p) for p in seg.points])
    chord = LineString([tuple(seg.first), tuple(seg.last)])
    return shapely.hausdorff_distance(path, chord, densify=0.001)


@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_natural_diagonal(n):
    result = hausdorff(segment(NATURAL, (0, 0), (n, n)), (0, 0), (n, n))
    assert abs(result.value - n / math.sqrt(2)) <= result.error_bound


@pytest.mark.parametrize("q", [(0, 5), (7, 0), (0, -3), (-4, 0), (0, 0)])
def test_axis_segments_are_exact(q):
    assert hausdorff(segment(NATURAL, (0, 0), q), (0, 0), q).value == 0.0


def test_staircase_against_oracle():
    seg = first_quadrant_segment((0, 0), (3, 5), STAIRCASE)
    result = hausdorff(seg, (0, 0), (3, 5))
    assert 0 <= result.value <= 2
    assert result.value == pytest.approx(shapely_hausdorff(seg), abs=result.error_bound)
    # the corner at (0,3) sits 9/sqrt(34) from the chord
    assert result.value == pytest.approx(9 / math.sqrt(34), abs=1e-12)
    assert result.arg_point == (0, 3)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([NATURAL, Waterline()]), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-6, 6), st.integers(-6, 6))
def test_matches_shapely(assignment, px, py, dx, dy):
    assume(dx or dy)
    p, q = Point(px, py), Point(px + dx, py + dy)
    seg = segment(assignment, p, q)
    result = hausdorff(seg, p, q, 0.002)
    assert result.value == pytest.approx(shapely_hausdorff(seg), abs=result.error_bound + 1e-9)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([NATURAL, Waterline()]), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-6, 6), st.integers(-6, 6))
def test_reverse_symmetry(assignment, px, py, dx, dy):
    p, q = Point(px, py), Point(px + dx, py + dy)
    forward = hausdorff(segment(assignment, p, q), p, q).value
    backward = hausdorff(segment(assignment, q, p), q, p).value
    assert forward == backward


def test_halving_step_stays_within_bounds():
    seg = segment(Waterline(), (3, -3), (6, 3))
    coarse = hausdorff(seg, (3, -3), (6, 3), 0.1)
    fine = hausdorff(seg, (3, -3), (6, 3), 0.05)
    assert abs(coarse.value - fine.value) <= coarse.error_bound + fine.error_bound
    assert fine.error_bound == 0.025


def test_errors():
    seg = segment(NATURAL, (0, 0), (2, 2))
    with pytest.raises(ValueError):
        hausdorff(seg, (0, 0), (2, 3))
    with pytest.raises(ValueError):
        hausdorff(seg, (0, 0), (2, 2), 0)
    with pytest.raises(ValueError):
        hausdorff_growth(NATURAL, (0, 0), (1, 1), [0])


def test_point_segment_distance():
    assert point_segment_distance(0, 1, 0, 0, 2, 0) == 1
    assert point_segment_distance(3, 0, 0, 0, 2, 0) == 1
    assert point_segment_distance(1, 1, 0, 0, 0, 0) == math.sqrt(2)


def test_growth_rows_and_csv():
    rows = hausdorff_growth(NATURAL, (0, 0), (1, 1), [1, 2, 4])
    assert [n for n, _, _ in rows] == [1, 2, 4]
    for n, value, bound in rows:
        assert abs(value - n / math.sqrt(2)) <= bound
    lines = rows_to_csv(rows).splitlines()
    assert lines[0] == "n,value,error_bound"
    assert len(lines) == 4
    assert float(lines[1].split(",")[1]) == rows[0][1]
