"""Euclidean minimum spanning trees and the tree types built on them."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import NormalizationFailed, NotALeaf
from .geometry import EPS_ANG, EPS_LEN, PointSet, radial_gaps, radial_order, radial_order_from

NO_PARENT = -1


@dataclass(frozen=True)
class Tree:
    """Undirected tree over point indices ``0..n-1`` stored as a sorted edge list.

    Only index sanity is checked on construction; use :meth:`is_spanning_tree`
    for the structural check (tampered trees must stay representable).
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        norm = []
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            norm.append((i, j) if i < j else (j, i))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def weight(self, ps: PointSet) -> float:
        return math.fsum(ps.dist(i, j) for i, j in self.edges)

    def is_spanning_tree(self) -> bool:
        if len(self.edges) != self.n - 1 or len(set(self.edges)) != len(self.edges):
            return False
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class RootedTree:
    """A tree hung from ``root``.

    ``children[v]`` lists the children of ``v`` counterclockwise, starting just
    after the direction towards ``parent[v]`` (for the root: after polar angle 0).
    ``order`` is a breadth-first order starting at the root.
    """

    tree: Tree
    root: int
    parent: tuple
    children: tuple
    order: tuple = field(repr=False)

    def incident(self, v: int) -> list[int]:
        """Neighbors of ``v`` in radial order, parent first when there is one."""
        p = self.parent[v]
        return ([p] if p != NO_PARENT else []) + list(self.children[v])


def bottleneck(t: Tree, ps: PointSet) -> float:
    """Largest edge length of ``t`` (0 for an edgeless tree)."""
    if not t.edges:
        return 0.0
    d2 = ps.sq_dists
    return math.sqrt(max(float(d2[i, j]) for i, j in t.edges))


def compute_emst(ps: PointSet, normalize: bool = True) -> Tree:
    """Euclidean MST by O(n^2) Prim.

    Equal weights are ordered by the (min index, max index) pair, which makes
    the tree unique. With ``normalize`` the result is passed through
    :func:`enforce_degree5`.
    """
    n = ps.n
    if n == 1:
        return Tree(1, ())
    d2 = ps.sq_dists
    idx = np.arange(n)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = d2[0].copy()
    par = np.zeros(n, dtype=np.int64)
    best[0] = np.inf
    edges = []
    for _ in range(n - 1):
        masked = np.where(in_tree, np.inf, best)
        m = masked.min()
        ties = np.flatnonzero(masked == m)
        if len(ties) > 1:
            lo = np.minimum(ties, par[ties])
            hi = np.maximum(ties, par[ties])
            w = int(ties[np.lexsort((hi, lo))[0]])
        else:
            w = int(ties[0])
        edges.append((int(par[w]), w))
        in_tree[w] = True
        new = d2[w]
        lo_new, hi_new = np.minimum(idx, w), np.maximum(idx, w)
        lo_old, hi_old = np.minimum(idx, par), np.maximum(idx, par)
        key_better = (lo_new < lo_old) | ((lo_new == lo_old) & (hi_new < hi_old))
        improve = ~in_tree & ((new < best) | ((new == best) & key_better))
        best = np.where(improve, new, best)
        par = np.where(improve, w, par)
    t = Tree(n, tuple(edges))
    return enforce_degree5(t, ps) if normalize else t


def enforce_degree5(t: Tree, ps: PointSet) -> Tree:
    """Return an MST of equal weight whose maximum degree is at most 5.

    A vertex of degree >= 6 in an MST has two consecutive incident edges vu, vw
    at exactly 60 degrees with |vu| = |vw| = |uw|; the edge to the larger index
    of u, w is replaced by uw.
    """
    adj = [set(a) for a in t.adjacency()]
    for _ in range(6 * t.n + 1):
        heavy = [v for v in range(t.n) if len(adj[v]) >= 6]
        if not heavy:
            return Tree(t.n, tuple((i, j) for i in range(t.n) for j in adj[i] if i < j))
        v = heavy[0]
        swap = _find_equilateral_swap(v, adj, ps)
        if swap is None:
            raise NormalizationFailed(f"no equal-weight swap lowers vertex {v} (degree {len(adj[v])})")
        keep, drop = swap
        adj[v].discard(drop)
        adj[drop].discard(v)
        adj[keep].add(drop)
        adj[drop].add(keep)
    raise NormalizationFailed("degree normalization did not converge")


def _find_equilateral_swap(v, adj, ps):
    ring = radial_order(v, sorted(adj[v]), ps)
    gaps = radial_gaps(v, ring, ps)
    options = []
    for i, gap in enumerate(gaps):
        a, b = ring[i], ring[(i + 1) % len(ring)]
        if gap > 60.0 + EPS_ANG or b in adj[a]:
            continue
        la, lb, lab = ps.dist(v, a), ps.dist(v, b), ps.dist(a, b)
        ref = max(la, lb, lab)
        if max(la, lb, lab) - min(la, lb, lab) > EPS_LEN * ref:
            continue
        lo, hi = min(a, b), max(a, b)
        options.append((lo, hi))  # drop v-hi, lo gains an edge
        options.append((hi, lo))
    for keep, drop in options:
        if len(adj[keep]) <= 4:
            return keep, drop
    return None


def root_at_leaf(t: Tree, ps: PointSet, leaf: Optional[int] = None) -> RootedTree:
    """Root ``t`` at a leaf; by default the leaf with smallest (x, y)."""
    adj = t.adjacency()
    if leaf is None:
        leaves = [v for v in range(t.n) if len(adj[v]) == 1]
        if not leaves:
            if t.n == 1:
                leaf = 0
            else:
                raise NotALeaf("tree has no leaf")
        else:
            leaf = min(leaves, key=lambda v: (ps[v].x, ps[v].y, v))
    elif not (0 <= leaf < t.n) or (t.n > 1 and len(adj[leaf]) != 1):
        raise NotALeaf(f"vertex {leaf} is not a leaf")
    return root_tree(t, ps, leaf)


def root_tree(t: Tree, ps: PointSet, root: int) -> RootedTree:
    """Root ``t`` at an arbitrary vertex; children are radially ordered."""
    adj = t.adjacency()
    parent = [NO_PARENT] * t.n
    children: list[tuple] = [()] * t.n
    order = []
    seen = [False] * t.n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        order.append(v)
        kids = [w for w in adj[v] if not seen[w]]
        for w in kids:
            seen[w] = True
            parent[w] = v
            queue.append(w)
        if parent[v] == NO_PARENT:
            children[v] = tuple(radial_order(v, kids, ps))
        else:
            children[v] = tuple(radial_order_from(v, parent[v], kids, ps))
    if len(order) != t.n:
        raise ValueError("tree is not connected")
    return RootedTree(t, root, tuple(parent), tuple(children), tuple(order))


def hop_distance(t: Tree, a: int, b: int) -> int:
    """Number of tree edges on the path between ``a`` and ``b``."""
    if a == b:
        return 0
    adj = t.adjacency()
    depth = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in depth:
                depth[w] = depth[u] + 1
                if w == b:
                    return depth[w]
                queue.append(w)
    raise ValueError(f"{a} and {b} are not connected")


def min_angle_at_vertices(t: Tree, ps: PointSet) -> float:
    """Smallest angle between consecutive incident edges over all vertices."""
    adj = t.adjacency()
    best = 360.0
    for v in range(t.n):
        if len(adj[v]) >= 2:
            gaps = radial_gaps(v, radial_order(v, adj[v], ps), ps)
            best = min(best, min(gaps))
    return best
