import math

import numpy as np
import pytest

from bottleneck_trees import BadParams, NamedConstruction, bottleneck, compute_emst, generate, random_points
from bottleneck_trees.constructions import NAMES, expected_ratio


def test_sizes():
    sizes = {"square_center": 5, "pentagon_center": 6, "triangle_center": 4, "spider_beta2": 7,
             "hex_star": 7, "lower19": 19}
    for name, n in sizes.items():
        assert generate(name).n == n
    assert generate("random", n=13, seed=2).n == 13


def test_rings_have_center_and_radius():
    for name, k in (("square_center", 4), ("pentagon_center", 5), ("triangle_center", 3), ("hex_star", 6)):
        ps = generate(name, radius=2.5)
        assert tuple(ps[0]) == (0.0, 0.0)
        r = np.hypot(*ps.coords[1:].T)
        assert np.allclose(r, 2.5, atol=1e-12)
        assert len(r) == k


def test_lower19_structure():
    ps = generate("lower19")
    t = compute_emst(ps)
    lengths = [ps.dist(a, b) for a, b in t.edges]
    assert len(lengths) == 18
    assert np.allclose(lengths, 1.0, atol=1e-12)
    # every non-edge is strictly longer than 1, so those 18 unit edges are the whole EMST
    d = np.sqrt(ps.sq_dists)
    mask = ~np.eye(19, dtype=bool)
    for a, b in t.edges:
        mask[a, b] = mask[b, a] = False
    assert d[mask].min() > 1.0 + 1e-9
    # center p has degree 3 and each arm end a2 has degree 3 with 120 degree angles
    deg = t.degrees()
    assert deg[0] == 3
    assert sorted(deg).count(3) == 4
    # |p a3| for the first branch point of an arm
    assert ps.dist(0, 3) == pytest.approx(math.sqrt(7), abs=1e-12)
    assert ps.dist(0, 5) == pytest.approx(math.sqrt(7), abs=1e-12)


def test_spider_distances():
    ps = generate("spider_beta2")
    t = compute_emst(ps)
    assert bottleneck(t, ps) == pytest.approx(1.0)
    assert sorted(t.edges) == [(0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6)]
    assert ps.dist(0, 2) == pytest.approx(2.0)
    assert ps.dist(1, 3) == pytest.approx(math.sqrt(3))
    assert ps.dist(2, 4) == pytest.approx(2 * math.sqrt(3))


def test_determinism():
    for name in NAMES:
        a = generate(name, radius=1.5, n=20, seed=4)
        b = generate(NamedConstruction(name, radius=1.5, n=20, seed=4))
        assert np.array_equal(a.coords, b.coords)
    assert not np.array_equal(random_points(10, 1).coords, random_points(10, 2).coords)


def test_random_points_separated():
    ps = random_points(300, 9)
    d = np.sqrt(ps.sq_dists) + np.eye(300)
    assert d.min() >= 1e-6
    assert ps.coords.min() >= 0.0 and ps.coords.max() < 1.0


def test_expected_ratios():
    assert expected_ratio("square_center", 3) == pytest.approx(math.sqrt(2))
    assert expected_ratio("lower19", 2) == pytest.approx(math.sqrt(7))
    assert expected_ratio("random", 2) is None
    assert NamedConstruction("pentagon_center").expected == {4: pytest.approx(1.1755705045849463)}


def test_bad_params():
    with pytest.raises(BadParams):
        NamedConstruction("nonagon")
    with pytest.raises(BadParams):
        generate("square_center", radius=0.0)
    with pytest.raises(BadParams):
        generate("random", n=0)
