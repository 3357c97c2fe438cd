"""Generators for the named lower-bound point sets and seeded random sets."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import BadParams
from .geometry import PointSet

SQRT7 = math.sqrt(7.0)

# Exact ratio (degree bound -> degree-K bottleneck / MST bottleneck) per construction.
EXPECTED_RATIOS = {
    "square_center": {3: math.sqrt(2.0)},
    "pentagon_center": {4: 2.0 * math.sin(math.radians(36.0))},
    "spider_beta2": {2: 2.0},
    "lower19": {2: SQRT7},
    "triangle_center": {},
    "hex_star": {},
    "random": {},
}
NAMES = tuple(EXPECTED_RATIOS)
MIN_RANDOM_SEPARATION = 1e-6


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    radius: float = 1.0
    n: int = 10
    seed: int = 0
    expected: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.name not in EXPECTED_RATIOS:
            raise BadParams(f"unknown construction {self.name!r}; choose from {', '.join(NAMES)}")
        if not self.expected:
            object.__setattr__(self, "expected", dict(EXPECTED_RATIOS[self.name]))


def _polar(r: float, deg: float) -> tuple[float, float]:
    t = math.radians(deg)
    return (r * math.cos(t), r * math.sin(t))


def _center_ring(k: int, r: float, start: float) -> list:
    return [(0.0, 0.0)] + [_polar(r, start + 360.0 * i / k) for i in range(k)]


def _spider(r: float) -> list:
    pts = [(0.0, 0.0)]
    for bearing in (90.0, 210.0, 330.0):
        pts += [_polar(r, bearing), _polar(2 * r, bearing)]
    return pts


def _lower19(r: float) -> list:
    # center p, then per arm: a1, a2 on the arm, a3, a4 on one branch, a5, a6 on the other
    pts = [(0.0, 0.0)]
    for bearing in (90.0, 210.0, 330.0):
        a1 = _polar(r, bearing)
        a2 = _polar(2 * r, bearing)
        arm = [a1, a2]
        for turn in (60.0, -60.0):
            dx, dy = _polar(r, bearing + turn)
            arm += [(a2[0] + dx, a2[1] + dy), (a2[0] + 2 * dx, a2[1] + 2 * dy)]
        pts += arm
    return pts


def random_points(n: int, seed: int) -> PointSet:
    """``n`` uniform points in the unit square; candidates within 1e-6 of an accepted point are redrawn."""
    if n < 1:
        raise BadParams("random construction needs n >= 1")
    rng = np.random.default_rng(seed)
    pts = np.empty((0, 2))
    while len(pts) < n:
        cand = rng.random(2)
        if len(pts) == 0 or np.min(np.hypot(*(pts - cand).T)) >= MIN_RANDOM_SEPARATION:
            pts = np.vstack([pts, cand])
    return PointSet(pts)


def generate(c: NamedConstruction | str, radius: float = 1.0, n: int = 10, seed: int = 0) -> PointSet:
    if isinstance(c, str):
        c = NamedConstruction(c, radius=radius, n=n, seed=seed)
    r = c.radius
    if not (r > 0 and math.isfinite(r)):
        raise BadParams(f"radius must be positive, got {r}")
    if c.name == "square_center":
        return PointSet(_center_ring(4, r, 45.0))
    if c.name == "pentagon_center":
        return PointSet(_center_ring(5, r, 90.0))
    if c.name == "triangle_center":
        return PointSet(_center_ring(3, r, 90.0))
    if c.name == "hex_star":
        return PointSet(_center_ring(6, r, 0.0))
    if c.name == "spider_beta2":
        return PointSet(_spider(r))
    if c.name == "lower19":
        return PointSet(_lower19(r))
    return random_points(c.n, c.seed)


def expected_ratio(name: str, K: int) -> Optional[float]:
    return EXPECTED_RATIOS.get(name, {}).get(K)
