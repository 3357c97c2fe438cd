"""Planar primitives: points, distances, convex angles and radial orderings.

Angles are measured in degrees throughout the package.
"""
from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DegenerateAngle, DuplicatePoints

# Slack for comparing measured angles against fixed thresholds (degrees).
EPS_ANG = 1e-7
# Relative slack for length comparisons.
EPS_LEN = 1e-9


class Point(NamedTuple):
    x: float
    y: float


class PointSet:
    """Immutable ordered collection of pairwise-distinct planar points.

    Indices ``0..n-1`` are the identities used by every tree in the package.
    """

    def __init__(self, points: Iterable[Sequence[float]]):
        coords = np.array([(float(p[0]), float(p[1])) for p in points], dtype=float)
        if coords.size == 0:
            raise ValueError("a point set needs at least one point")
        coords = coords.reshape(-1, 2)
        if not np.all(np.isfinite(coords)):
            raise ValueError("point coordinates must be finite")
        uniq = np.unique(coords, axis=0)
        if len(uniq) != len(coords):
            raise DuplicatePoints(f"{len(coords) - len(uniq)} duplicate point(s) in input")
        coords.flags.writeable = False
        self._coords = coords

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def n(self) -> int:
        return len(self._coords)

    def __len__(self) -> int:
        return len(self._coords)

    def __getitem__(self, i: int) -> Point:
        x, y = self._coords[i]
        return Point(float(x), float(y))

    def __iter__(self):
        return (self[i] for i in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._coords.shape == other._coords.shape and bool(
            np.array_equal(self._coords, other._coords)
        )

    def __hash__(self) -> int:
        return hash(self._coords.tobytes())

    def __repr__(self) -> str:
        return f"PointSet(n={self.n})"

    @cached_property
    def sq_dists(self) -> np.ndarray:
        """Matrix of squared pairwise distances."""
        diff = self._coords[:, None, :] - self._coords[None, :, :]
        d2 = np.einsum("ijk,ijk->ij", diff, diff)
        d2.flags.writeable = False
        return d2

    def dist(self, i: int, j: int) -> float:
        return dist(self[i], self[j])

    def scale(self) -> float:
        """Diameter of the bounding box, used to make tolerances relative."""
        span = self._coords.max(axis=0) - self._coords.min(axis=0)
        return float(max(np.hypot(*span), 1.0))


def dist(a: Sequence[float], b: Sequence[float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def angle_at(u: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Convex angle in [0, 180] between the rays u->a and u->b."""
    ax, ay = a[0] - u[0], a[1] - u[1]
    bx, by = b[0] - u[0], b[1] - u[1]
    if (ax == 0 and ay == 0) or (bx == 0 and by == 0):
        raise DegenerateAngle("angle undefined: ray endpoint coincides with apex")
    cross = ax * by - ay * bx
    dot = ax * bx + ay * by
    return math.degrees(math.atan2(abs(cross), dot))


def polar_angle(center: Sequence[float], p: Sequence[float]) -> float:
    """Direction of center->p in [0, 360)."""
    dx, dy = p[0] - center[0], p[1] - center[1]
    if dx == 0 and dy == 0:
        raise DegenerateAngle("polar angle of a point about itself")
    theta = math.degrees(math.atan2(dy, dx))
    if theta < 0:
        theta += 360.0
    return 0.0 if theta >= 360.0 else theta


def ccw_turn(center: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Counterclockwise sweep in [0, 360) from direction center->a to center->b."""
    t = (polar_angle(center, b) - polar_angle(center, a)) % 360.0
    return 0.0 if t >= 360.0 else t


def radial_order(center: int, neighbors: Sequence[int], ps: PointSet) -> list[int]:
    """Neighbors sorted counterclockwise by polar angle about ``center``.

    Collinear ties are broken by index.
    """
    c = ps[center]
    keyed = []
    for j in neighbors:
        if j == center:
            raise DegenerateAngle(f"vertex {center} listed as its own neighbor")
        keyed.append((polar_angle(c, ps[j]), j))
    keyed.sort()
    return [j for _, j in keyed]


def radial_order_from(center: int, ref: int, neighbors: Sequence[int], ps: PointSet) -> list[int]:
    """Neighbors in counterclockwise order starting just after direction center->ref."""
    c, r = ps[center], ps[ref]
    keyed = []
    for j in neighbors:
        if j == center:
            raise DegenerateAngle(f"vertex {center} listed as its own neighbor")
        t = ccw_turn(c, r, ps[j])
        # a neighbor exactly on the reference ray goes last, not first
        keyed.append((t if t > 0 else 360.0, j))
    keyed.sort()
    return [j for _, j in keyed]


def radial_gaps(center: int, ordered: Sequence[int], ps: PointSet) -> list[float]:
    """Angles between consecutive neighbors of an already-sorted cyclic list.

    ``gaps[i]`` is the sweep from ``ordered[i]`` to ``ordered[i + 1]`` (wrapping).
    """
    d = len(ordered)
    if d == 0:
        return []
    if d == 1:
        return [360.0]
    c = ps[center]
    return [ccw_turn(c, ps[ordered[i]], ps[ordered[(i + 1) % d]]) for i in range(d)]


def orient(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> float:
    """Twice the signed area of triangle abc; positive when counterclockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def in_closed_triangle(q, a, b, c, tol: float = EPS_LEN) -> bool:
    """True when q lies inside triangle abc or within ``tol`` of its boundary.

    Degenerate (collinear) triangles are treated as the segment they span.
    """
    scale = max(dist(a, b), dist(b, c), dist(a, c))
    area2 = orient(a, b, c)
    if abs(area2) <= tol * scale * scale:
        # farthest pair spans the degenerate triangle
        p0, p1 = max(((a, b), (b, c), (a, c)), key=lambda e: dist(*e))
        return _dist_to_segment(q, p0, p1) <= tol * scale
    sign = 1.0 if area2 > 0 else -1.0
    slack = tol * scale * scale
    return (
        sign * orient(a, b, q) >= -slack
        and sign * orient(b, c, q) >= -slack
        and sign * orient(c, a, q) >= -slack
    )


def _dist_to_segment(q, a, b) -> float:
    vx, vy = b[0] - a[0], b[1] - a[1]
    wx, wy = q[0] - a[0], q[1] - a[1]
    L2 = vx * vx + vy * vy
    t = 0.0 if L2 == 0 else max(0.0, min(1.0, (wx * vx + wy * vy) / L2))
    return math.hypot(wx - t * vx, wy - t * vy)
