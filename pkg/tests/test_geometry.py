import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bottleneck_trees import DegenerateAngle, DuplicatePoints, PointSet, angle_at, dist, radial_order
from bottleneck_trees.geometry import (
    ccw_turn,
    in_closed_triangle,
    orient,
    polar_angle,
    radial_gaps,
    radial_order_from,
)

coord = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)


def test_dist_examples():
    assert dist((0, 0), (3, 4)) == 5.0
    assert dist((1, 1), (1, 1)) == 0.0
    assert dist((0, 0), (1, math.sqrt(3))) == pytest.approx(2.0, abs=1e-15)


def test_angle_examples():
    assert angle_at((0, 0), (1, 0), (0.5, math.sqrt(3) / 2)) == pytest.approx(60.0, abs=1e-12)
    assert angle_at((0, 0), (1, 0), (-1, 0)) == pytest.approx(180.0, abs=1e-12)
    assert angle_at((0, 0), (1, 0), (0, 1)) == pytest.approx(90.0, abs=1e-12)


def test_angle_degenerate():
    with pytest.raises(DegenerateAngle):
        angle_at((0, 0), (0, 0), (1, 0))
    with pytest.raises(ValueError):
        angle_at((2, 2), (1, 1), (2, 2))


def test_angle_law_of_cosines():
    rng = np.random.default_rng(5)
    for _ in range(200):
        u, a, b = rng.normal(size=(3, 2))
        la, lb, lab = dist(u, a), dist(u, b), dist(a, b)
        cos = (la * la + lb * lb - lab * lab) / (2 * la * lb)
        expected = math.degrees(math.acos(max(-1.0, min(1.0, cos))))
        assert angle_at(u, a, b) == pytest.approx(expected, abs=1e-6)


@given(point, point)
def test_dist_symmetric_nonnegative(a, b):
    assert dist(a, b) == dist(b, a) >= 0.0


@given(point, point, point)
def test_triangle_inequality(a, b, c):
    assert dist(a, c) <= dist(a, b) + dist(b, c) + 1e-9 * (1 + dist(a, b) + dist(b, c))


@given(point, point, point)
def test_angle_range_and_symmetry(u, a, b):
    if dist(u, a) < 1e-6 or dist(u, b) < 1e-6:
        return
    t = angle_at(u, a, b)
    assert 0.0 <= t <= 180.0
    assert t == pytest.approx(angle_at(u, b, a), abs=1e-12)


def test_polar_and_turn():
    assert polar_angle((0, 0), (1, 0)) == 0.0
    assert polar_angle((0, 0), (0, -1)) == pytest.approx(270.0)
    assert ccw_turn((0, 0), (1, 0), (0, 1)) == pytest.approx(90.0)
    assert ccw_turn((0, 0), (0, 1), (1, 0)) == pytest.approx(270.0)


def _ring(deg_list):
    return PointSet([(0.0, 0.0)] + [(math.cos(math.radians(d)), math.sin(math.radians(d))) for d in deg_list])


def test_radial_order_examples():
    ps = _ring([350, 10, 170])
    assert radial_order(0, [1, 2, 3], ps) == [2, 3, 1]
    assert radial_order(0, [3], ps) == [3]
    sq = _ring([45, 135, 225, 315])
    assert radial_order(0, [4, 2, 3, 1], sq) == [1, 2, 3, 4]


def test_radial_order_from_and_gaps():
    ps = _ring([0, 90, 200, 300])
    # the reference itself sweeps a full turn, so it comes last
    assert radial_order_from(0, 3, [1, 2, 3, 4], ps) == [4, 1, 2, 3]
    assert radial_order_from(0, 3, [1, 2, 4], ps) == [4, 1, 2]
    gaps = radial_gaps(0, [3, 4, 1, 2], ps)
    assert gaps == pytest.approx([100.0, 60.0, 90.0, 110.0])
    assert sum(gaps) == pytest.approx(360.0)


@settings(max_examples=60)
@given(st.lists(st.floats(min_value=0, max_value=359.9), min_size=2, max_size=6, unique=True))
def test_gaps_sum_to_full_turn(dirs):
    dirs = sorted(dirs)
    if min(np.diff(dirs + [dirs[0] + 360])) < 1e-3:
        return
    ps = _ring(dirs)
    order = radial_order(0, list(range(1, len(dirs) + 1)), ps)
    assert sum(radial_gaps(0, order, ps)) == pytest.approx(360.0, abs=1e-9)


def test_orient_and_triangle():
    assert orient((0, 0), (1, 0), (0, 1)) > 0
    assert orient((0, 0), (0, 1), (1, 0)) < 0
    tri = ((0, 0), (2, 0), (0, 2))
    assert in_closed_triangle((0.5, 0.5), *tri)
    assert in_closed_triangle((1, 0), *tri)
    assert not in_closed_triangle((2, 2), *tri)
    # degenerate triangle: the segment itself
    assert in_closed_triangle((1, 1), (0, 0), (2, 2), (1, 1))
    assert not in_closed_triangle((1, 1.1), (0, 0), (2, 2), (1, 1))


def test_pointset():
    ps = PointSet([(0, 0), (3, 4), (1, 1)])
    assert ps.n == len(ps) == 3
    assert ps[1].x == 3 and ps[1].y == 4
    assert ps.dist(0, 1) == 5.0
    assert ps.sq_dists[0, 1] == 25.0
    assert ps == PointSet([(0, 0), (3, 4), (1, 1)])
    assert hash(ps) == hash(PointSet([(0, 0), (3, 4), (1, 1)]))
    with pytest.raises(DuplicatePoints):
        PointSet([(0, 0), (1, 1), (0, 0)])
    with pytest.raises(ValueError):
        PointSet([(0, float("nan"))])
