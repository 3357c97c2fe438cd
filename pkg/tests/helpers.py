"""Point-set generators used only by the tests."""
import itertools
import math

import numpy as np

from bottleneck_trees import PointSet, Tree


def branching_points(seed, n_max=60, min_gap=64.0, degree_weights=(1, 1, 2, 4, 6)):
    """Grow a random tree whose vertices often have degree 4 or 5.

    Edges have length in [0.88, 1] and every non-adjacent pair is farther apart
    than 1.0, so the grown tree is the unique MST of the returned points.
    """
    rng = np.random.default_rng(seed)
    pts = [np.zeros(2)]
    frontier = [(0, None)]
    w = np.array(degree_weights, dtype=float)
    w /= w.sum()
    while frontier and len(pts) < n_max:
        idx, back = frontier.pop(0)
        d = int(rng.choice(np.arange(1, 6), p=w))
        if back is not None and d == 1:
            continue
        slack = 360.0 - min_gap * d
        gaps = min_gap + slack * rng.dirichlet(np.ones(d))
        start = back if back is not None else rng.uniform(0, 360)
        dirs = start + np.concatenate([[0.0], np.cumsum(gaps[:-1])])
        if back is not None:
            dirs = dirs[1:]
        for theta in dirs:
            if len(pts) >= n_max:
                break
            length = rng.uniform(0.88, 1.0)
            t = math.radians(theta)
            cand = pts[idx] + length * np.array([math.cos(t), math.sin(t)])
            others = np.array([p for j, p in enumerate(pts) if j != idx])
            if len(others) and np.min(np.hypot(*(others - cand).T)) <= 1.0 + 1e-6:
                continue
            pts.append(cand)
            frontier.append((len(pts) - 1, (theta + 180.0) % 360.0))
    return PointSet(pts)


def _ring_dirs(rng, d, min_gap, start):
    gaps = min_gap + (360.0 - min_gap * d) * rng.dirichlet(np.ones(d))
    return start + np.concatenate([[0.0], np.cumsum(gaps[:-1])])


def _unique_mst_ok(pts, edges):
    """Every non-edge strictly longer than every edge: the edges form the unique MST."""
    xy = np.array(pts)
    d = np.hypot(*(xy[:, None, :] - xy[None, :, :]).transpose(2, 0, 1))
    longest = max(d[i, j] for i, j in edges)
    mask = np.ones_like(d, dtype=bool)
    for i, j in edges:
        mask[i, j] = mask[j, i] = False
    np.fill_diagonal(mask, False)
    return bool(np.all(d[mask] > longest * (1 + 1e-9)))


def five_star_points(seed, l, min_gap=61.0, tries=3000):
    """Vertex v (index 1) with five neighbors; leaf r (index 0) is one of them.

    One neighbor of v, v1 (index 2), gets ``l`` further children.  Returns
    ``(points, r)`` with the designed tree guaranteed to be the unique MST, or
    None if no sample was accepted.
    """
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        dirs_v = _ring_dirs(rng, 5, min_gap, 180.0)
        lens = rng.uniform(0.9, 1.0, size=5)
        v = np.zeros(2)
        ring = [v + L * np.array([math.cos(math.radians(t)), math.sin(math.radians(t))]) for L, t in zip(lens, dirs_v)]
        gaps_v = np.diff(np.append(dirs_v, dirs_v[0] + 360.0))
        # the transform hangs the grandchildren off the neighbor on the tighter side of r
        r, v1 = ring[0], ring[1] if gaps_v[0] + gaps_v[1] <= gaps_v[3] + gaps_v[4] else ring[4]
        others = [p for p in ring[1:] if p is not v1]
        pts = [r, v, v1] + others
        edges = [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5)]
        back = math.degrees(math.atan2(-v1[1], -v1[0]))
        dirs_u = _ring_dirs(rng, l + 1, min_gap, back)[1:]
        for t in dirs_u:
            L = rng.uniform(0.9, 1.0)
            pts.append(v1 + L * np.array([math.cos(math.radians(t)), math.sin(math.radians(t))]))
            edges.append((2, len(pts) - 1))
        if _unique_mst_ok(pts, edges):
            return PointSet(pts), 0
    return None


# Unique-MST samples from five_star_points-style searches, frozen so that every
# reachable branch of the five-neighbor degree-3 step has a fixed regression case.
# Index 0 is the root leaf r and index 1 is the degree-5 vertex v.
FIVE_STAR_CASES = {
    "l=2:u1u2": [[-0.8497923737, 0.0], [0.0, 0.0], [-0.2842589741, 0.9000390058], [-0.0715390047, -0.8271267815],
                 [0.8163006998, -0.4489676366], [0.6177589463, 0.57246355], [0.0649718685, 1.7181323473],
                 [-0.8986572655, 1.5752697295]],
    "l=2:ru1": [[-0.9608592498, 0.0], [0.0, 0.0], [-0.3947012546, -0.8633411713], [0.719976415, -0.5067388462],
                [0.8283904498, 0.4569181422], [-0.2909580347, 0.7549295027], [-1.3443056209, -1.040577116],
                [0.2336491398, -1.4517723773]],
    "l=2:u2v2": [[-0.8799281776, 0.0], [0.0, 0.0], [-0.101024533, -0.8658555541], [0.7018273692, -0.4590636198],
                 [0.7063901034, 0.4241025103], [-0.0729976485, 0.8329759206], [-0.9247495872, -1.1285284451],
                 [0.5578384774, -1.3842120309]],
    "l=3:ru1": [[-0.9718218569, 0.0], [0.0, 0.0], [-0.2539787321, -0.9633966809], [0.7122865789, -0.5200254444],
                [0.8113910683, 0.5763788094], [-0.3836198771, 0.8265310369], [-1.2398113369, -0.9888039495],
                [-0.6755287863, -1.8628648151], [0.3400200648, -1.6360822316]],
    "l=3:rv1": [[-0.9713255574, 0.0], [0.0, 0.0], [-0.0595059425, 0.9643873172], [-0.2640350812, -0.9520005632],
                [0.841532862, -0.5016048332], [0.8407202485, 0.5118997311], [0.745573816, 1.5172157227],
                [-0.1901572444, 1.8889144432], [-0.9959681899, 1.2495612347]],
}


def _polar(c, r, deg):
    t = math.radians(deg)
    return (c[0] + r * math.cos(t), c[1] + r * math.sin(t))


def hand_five_star(grand_dirs, length=0.35):
    """Non-MST rooted tree for the five-neighbor branches no MST sample reached.

    v = index 1 at the origin with r = index 0 at 180 degrees and v1..v4 =
    indices 2..5 at 250, 320, 33 and 106 degrees; v1 gets one short child per
    entry of ``grand_dirs`` (turn in degrees from the direction v1 -> v).
    Returns ``(points, edges)``.
    """
    v = (0.0, 0.0)
    pts = [_polar(v, 1.0, 180.0), v] + [_polar(v, 1.0, d) for d in (250.0, 320.0, 393.0, 466.0)]
    edges = [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5)]
    for g in grand_dirs:
        pts.append(_polar(pts[2], length, 70.0 + g))
        edges.append((2, len(pts) - 1))
    return PointSet(pts), edges


def prufer_trees(n):
    """Every labeled spanning tree on n vertices (Cayley: n^(n-2) of them)."""
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [i for i in range(n) if degree[i] == 1]
        edges.append((u, w))
        yield Tree(n, tuple(edges))
