"""Exact bottleneck degree-K spanning trees for small point sets.

The optimum is always one of the pairwise distances, so the solvers binary
search the sorted distinct distances with a feasibility test on the threshold
graph (all pairs no longer than the candidate).  Degree 2 feasibility is a
Hamiltonian path test by subset DP; larger degree bounds use backtracking.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .emst import Tree, bottleneck, compute_emst
from .errors import BudgetExceeded
from .geometry import PointSet

MAX_N_PATH = 22
MAX_N_TREE = 14


@dataclass(frozen=True)
class ExactResult:
    K: int
    value: float
    witness: Tree


@dataclass(frozen=True)
class RatioReport:
    K: int
    exact_value: float
    bst_value: float

    @property
    def ratio(self) -> float:
        return self.exact_value / self.bst_value if self.bst_value > 0 else 1.0


def _threshold_adjacency(ps: PointSet, d2_max: float) -> list[int]:
    ok = ps.sq_dists <= d2_max
    np.fill_diagonal(ok, False)
    weights = 1 << np.arange(ps.n, dtype=np.int64)
    return [int(x) for x in (ok * weights).sum(axis=1)]


def _connected(adj: list[int]) -> bool:
    n = len(adj)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


@lru_cache(maxsize=4)
def _layers(n: int) -> list[np.ndarray]:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.bitwise_count(masks)
    order = np.argsort(pc, kind="stable")
    cuts = np.searchsorted(pc[order], np.arange(n + 2))
    return [order[cuts[s]:cuts[s + 1]] for s in range(n + 1)]


def _path_reach(adj: list[int]) -> np.ndarray | None:
    """``reach[mask]`` = bitset of vertices ending a Hamiltonian path of ``mask``.

    Returns None as soon as some layer of the DP is empty.
    """
    n = len(adj)
    reach = np.zeros(1 << n, dtype=np.int64)
    for u in range(n):
        reach[1 << u] = 1 << u
    layers = _layers(n)
    for s in range(1, n):
        src = layers[s]
        src = src[reach[src] != 0]
        if len(src) == 0:
            return None
        for u in range(n):
            bit = 1 << u
            cand = src[(src & bit) == 0]
            hit = cand[(reach[cand] & adj[u]) != 0]
            reach[hit | bit] |= bit
    return reach


def _hamiltonian_path(adj: list[int]) -> list[int] | None:
    n = len(adj)
    if n == 1:
        return [0]
    if not _connected(adj):
        return None
    reach = _path_reach(adj)
    full = (1 << n) - 1
    if reach is None or reach[full] == 0:
        return None
    ends = int(reach[full])
    v = (ends & -ends).bit_length() - 1
    mask = full
    path = [v]
    while mask != (1 << v):
        prev = mask ^ (1 << v)
        options = int(reach[prev]) & adj[v]
        u = (options & -options).bit_length() - 1
        path.append(u)
        mask, v = prev, u
    return path[::-1]


def _degree_tree(n: int, adj: list[int], edges: list[tuple[int, int]], K: int) -> list | None:
    """Spanning tree of max degree K using ``edges`` (sorted by length), or None."""
    if n == 1:
        return []
    if not _connected(adj):
        return None
    parent = list(range(n))
    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    m = len(edges)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(i: int) -> bool:
        # chosen edges plus undecided edges between unsaturated endpoints
        g = [0] * n
        for a, b in chosen:
            g[a] |= 1 << b
            g[b] |= 1 << a
        for a, b in edges[i:]:
            if deg[a] < K and deg[b] < K:
                g[a] |= 1 << b
                g[b] |= 1 << a
        return _connected(g)

    def search(i: int) -> bool:
        if len(chosen) == n - 1:
            return True
        if m - i < n - 1 - len(chosen):
            return False
        a, b = edges[i]
        ra, rb = find(a), find(b)
        if ra != rb and deg[a] < K and deg[b] < K:
            # no path compression, so undo is a single reset
            parent[rb] = ra
            deg[a] += 1
            deg[b] += 1
            chosen.append((a, b))
            if search(i + 1):
                return True
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1
            parent[rb] = rb
            if not still_connectable(i + 1):
                return False
        return search(i + 1)

    return list(chosen) if search(0) else None


def _sorted_edges(ps: PointSet, d2_max: float) -> list[tuple[int, int]]:
    d2 = ps.sq_dists
    iu, ju = np.triu_indices(ps.n, 1)
    w = d2[iu, ju]
    keep = w <= d2_max
    order = np.lexsort((ju[keep], iu[keep], w[keep]))
    return [(int(iu[keep][k]), int(ju[keep][k])) for k in order]


def feasible(ps: PointSet, K: int, d2_max: float) -> Tree | None:
    """Spanning tree of max degree ``K`` whose squared edge lengths are <= ``d2_max``."""
    adj = _threshold_adjacency(ps, d2_max)
    if K == 2:
        path = _hamiltonian_path(adj)
        return None if path is None else Tree(ps.n, tuple(zip(path, path[1:])))
    found = _degree_tree(ps.n, adj, _sorted_edges(ps, d2_max), K)
    return None if found is None else Tree(ps.n, tuple(found))


def candidate_thresholds(ps: PointSet) -> np.ndarray:
    """Sorted distinct squared pairwise distances."""
    iu, ju = np.triu_indices(ps.n, 1)
    return np.unique(ps.sq_dists[iu, ju])


def _check_budget(ps: PointSet, K: int):
    if K not in (2, 3, 4, 5):
        raise ValueError(f"degree bound must be in 2..5, got {K}")
    limit = MAX_N_PATH if K == 2 else MAX_N_TREE
    if ps.n > limit:
        raise BudgetExceeded(f"exact degree-{K} solver is limited to n <= {limit} (got {ps.n})")


def exact_bottleneck_tree(ps: PointSet, K: int) -> ExactResult:
    """Optimal bottleneck over spanning trees of maximum degree ``K``."""
    _check_budget(ps, K)
    if ps.n == 1:
        return ExactResult(K, 0.0, Tree(1, ()))
    cands = candidate_thresholds(ps)
    lo, hi = 0, len(cands) - 1
    witness = feasible(ps, K, cands[hi])
    assert witness is not None, "complete graph always has a Hamiltonian path"
    while lo < hi:
        mid = (lo + hi) // 2
        found = feasible(ps, K, cands[mid])
        if found is None:
            lo = mid + 1
        else:
            hi, witness = mid, found
    return ExactResult(K, math.sqrt(float(cands[lo])), witness)


def bottleneck_hamiltonian_path(ps: PointSet) -> ExactResult:
    """Optimal bottleneck Hamiltonian path (degree bound 2) with a witness path."""
    return exact_bottleneck_tree(ps, 2)


def ratio(ps: PointSet, K: int) -> RatioReport:
    """Exact degree-K bottleneck divided by the MST bottleneck."""
    ex = exact_bottleneck_tree(ps, K)
    return RatioReport(K, ex.value, bottleneck(compute_emst(ps), ps))
