"""Degree-4, degree-3 and degree-2 spanning trees derived from a Euclidean MST.

The degree-4 and degree-3 transforms work on the MST rooted at a leaf ``r``
with single child ``v`` (the pair is written ``T+r``).  Every subtree hanging
from a child of ``v`` is transformed first, each together with its edge to
``v``; the edges around ``v`` are then replaced locally.  Each transformed
piece keeps ``r`` as a leaf, so its only neighbor (the *attach* vertex) may
differ from ``v``.  After the local step ``v`` has degree at most ``K - 1`` and
every new edge is at most sqrt(2) (degree 4) or sqrt(3) (degree 3) times the
MST bottleneck.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .emst import NO_PARENT, RootedTree, Tree, bottleneck, compute_emst, root_at_leaf
from .errors import GuaranteeViolated, LemmaViolated, PreconditionViolated
from .geometry import EPS_ANG, EPS_LEN, PointSet, ccw_turn, radial_gaps

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
FACTORS = {2: 3.0, 3: SQRT3, 4: SQRT2}


class AngleSlot(NamedTuple):
    """Angle between two consecutive incident edges of a vertex.

    ``index`` is the position of ``first`` in the vertex's radial incidence
    list (parent first); ``second`` follows it counterclockwise.
    """

    index: int
    first: int
    second: int
    degrees: float


class TransformResult(NamedTuple):
    tree: Tree
    attach_vertex: int
    natural: bool


@dataclass(frozen=True)
class DegreeBoundedTree:
    tree: Tree
    K: int
    bottleneck: float
    base_bottleneck: float
    factor: float
    # child vertex -> vertex adjacent to its parent after that subtree was transformed
    attach: Mapping[int, int] = field(default_factory=dict, repr=False, compare=False)
    added: tuple = field(default=(), repr=False, compare=False)
    root: int = field(default=NO_PARENT, compare=False)
    child: int = field(default=NO_PARENT, compare=False)
    # (vertex, case tag) for every local replacement of the degree-3 five-neighbor case
    cases: tuple = field(default=(), repr=False, compare=False)

    @property
    def guarantee(self) -> float:
        return self.factor * self.base_bottleneck

    @property
    def ratio(self) -> float:
        return self.bottleneck / self.base_bottleneck if self.base_bottleneck > 0 else 1.0

    def result(self) -> TransformResult:
        """Top-level view: which vertex ended up adjacent to the root."""
        adj = self.tree.adjacency()
        if self.root == NO_PARENT or not adj[self.root]:
            return TransformResult(self.tree, self.root, True)
        (att,) = adj[self.root]
        return TransformResult(self.tree, att, att == self.child)


def select_slots(gaps: list[float], mode: str) -> list[int]:
    """Pick the angle slots to resolve at a vertex with radial gaps ``gaps``.

    Rules by degree ``d = len(gaps)``:

    * ``d == 3``: one slot <= 120 (degree-3 mode only; degree-4 mode keeps all).
    * ``d == 4``: one slot <= 90 in degree-4 mode; two nonadjacent slots, one
      <= 90 and the other <= 120, in degree-3 mode.
    * ``d == 5``: two nonadjacent slots <= 90.

    Single slots: smallest angle wins, then smallest index.  Pairs: smallest
    angle sum, then smallest indices.  Angles that agree to within EPS_ANG are
    treated as equal, so rounding noise does not decide ties.
    """
    if mode not in ("deg3", "deg4"):
        raise ValueError(f"unknown mode {mode!r}")
    d = len(gaps)
    if d <= 2 or (d == 3 and mode == "deg4"):
        return []
    if d > 5:
        raise PreconditionViolated(f"vertex degree {d} exceeds 5")
    if d == 3 or (d == 4 and mode == "deg4"):
        limit = 120.0 if d == 3 else 90.0
        cands = [(g, i) for i, g in enumerate(gaps) if g <= limit + EPS_ANG]
        if not cands:
            raise LemmaViolated(f"no angle <= {limit} among {gaps}")
        best = min(g for g, _ in cands)
        # angles within EPS_ANG of each other count as equal; the lower index wins
        return [min(i for g, i in cands if g <= best + EPS_ANG)]
    lo_limit, hi_limit = (90.0, 120.0) if d == 4 else (90.0, 90.0)
    pairs = []
    for i in range(d):
        for j in range(i + 2, d):
            if i == 0 and j == d - 1:
                continue  # adjacent through the wraparound
            a, b = sorted((gaps[i], gaps[j]))
            if a <= lo_limit + EPS_ANG and b <= hi_limit + EPS_ANG:
                pairs.append((gaps[i] + gaps[j], i, j))
    if not pairs:
        raise LemmaViolated(f"no two nonadjacent angles within ({lo_limit}, {hi_limit}) among {gaps}")
    best = min(p[0] for p in pairs)
    _, i, j = min((0.0, i, j) for total, i, j in pairs if total <= best + 2 * EPS_ANG)
    return [i, j]


def choose_angles(v: int, rt: RootedTree, ps: PointSet, mode: str) -> list[AngleSlot]:
    """Angle slots at ``v`` (in ``rt``'s underlying tree) that the transform resolves."""
    ring = rt.incident(v)
    gaps = radial_gaps(v, ring, ps)
    d = len(ring)
    return [AngleSlot(i, ring[i], ring[(i + 1) % d], gaps[i]) for i in select_slots(gaps, mode)]


def _turn(center, a, b, sign: int) -> float:
    return ccw_turn(center, a, b) if sign > 0 else ccw_turn(center, b, a)


class _Rewriter:
    """Mutable edge set shared by all recursion steps of one transform run."""

    def __init__(self, rt: RootedTree, ps: PointSet, mode: str):
        self.rt = rt
        self.ps = ps
        self.mode = mode
        self.adj = [set(a) for a in rt.tree.adjacency()]
        self.base = bottleneck(rt.tree, ps)
        self.factor = SQRT2 if mode == "deg4" else SQRT3
        self.limit = self.factor * self.base * (1.0 + EPS_LEN)
        self.attach: dict[int, int] = {}
        self.added: list[tuple[int, int]] = []
        self.plans: dict[int, tuple] = {}
        self.cases: list[tuple[int, str]] = []

    def add(self, a: int, b: int):
        if b in self.adj[a]:
            raise GuaranteeViolated(f"edge ({a}, {b}) added twice")
        length = self.ps.dist(a, b)
        if length > self.limit:
            raise GuaranteeViolated(
                f"new edge ({a}, {b}) has length {length:.12g} > {self.factor:.6g} * {self.base:.12g}"
            )
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.added.append((min(a, b), max(a, b)))

    def remove(self, a: int, b: int):
        if b not in self.adj[a]:
            raise GuaranteeViolated(f"edge ({a}, {b}) is not present")
        self.adj[a].discard(b)
        self.adj[b].discard(a)

    # -- recursion structure -------------------------------------------------

    def subtasks(self, r: int, v: int) -> list[tuple[int, int]]:
        kids = self.rt.children[v]
        if len(kids) > 4:
            raise PreconditionViolated(f"vertex {v} has {len(kids) + 1} neighbors; normalize to degree 5 first")
        if self.mode == "deg3" and len(kids) == 4:
            plan = self._plan_five(r, v)
            self.plans[v] = plan
            _, vs, us = plan
            return [(v, x) for x in vs[1:]] + [(vs[0], u) for u in us]
        return [(v, x) for x in kids]

    def _plan_five(self, r: int, v: int):
        pv, pr = self.ps[v], self.ps[r]
        kids = self.rt.children[v]
        pts = [self.ps[k] for k in kids]
        a1 = ccw_turn(pv, pr, pts[0])
        a2 = ccw_turn(pv, pts[0], pts[1])
        a4 = ccw_turn(pv, pts[2], pts[3])
        a5 = ccw_turn(pv, pts[3], pr)
        # mirror the picture when the far side has the smaller pair of angles
        sign = 1 if a1 + a2 <= a4 + a5 else -1
        vs = list(kids) if sign > 0 else list(kids[::-1])
        grand = list(self.rt.children[vs[0]])
        if sign < 0:
            grand.reverse()
        # u1 is the first grandchild after v in the working orientation, then the
        # rest in the opposite direction, so that v sits between u1 and u2
        us = grand[:1] + grand[1:][::-1]
        return sign, vs, us

    def run(self) -> int:
        rt = self.rt
        root = rt.root
        (child,) = rt.children[root]
        stack = [(root, child, False)]
        while stack:
            r, v, expanded = stack.pop()
            if not expanded:
                stack.append((r, v, True))
                for task in reversed(self.subtasks(r, v)):
                    stack.append((task[0], task[1], False))
            else:
                self.attach[v] = self.local(r, v)
        return self.attach[child]

    # -- local replacements --------------------------------------------------

    def local(self, r: int, v: int) -> int:
        if v in self.plans:
            return self._local_five(r, v)
        kids = list(self.rt.children[v])
        ring = [r] + kids
        gaps = radial_gaps(v, ring, self.ps)
        attach = v
        for i in select_slots(gaps, self.mode):
            a, b = ring[i], ring[(i + 1) % len(ring)]
            if a == r or b == r:
                vi = b if a == r else a
                self.add(r, vi)
                self.remove(r, v)
                attach = vi
            else:
                self.add(a, b)
                self.remove(v, self.attach[a])
        return attach

    def _local_five(self, r: int, v: int) -> int:
        sign, (v1, v2, v3, v4), us = self.plans[v]
        ps, att = self.ps, self.attach
        pv, pv1 = ps[v], ps[v1]
        a1 = _turn(pv, ps[r], pv1, sign)
        a2 = _turn(pv, pv1, ps[v2], sign)
        l = len(us)

        def common(extra_adds, extra_removes):
            for e in extra_adds:
                self.add(*e)
            self.add(v3, v4)
            self.remove(r, v)
            self.remove(v1, v)
            self.remove(v, att[v3])
            for e in extra_removes:
                self.remove(*e)

        if l <= 1:
            self.cases.append((v, "l<=1"))
            common([(r, v1), (v1, v2)], [])
            return v1
        u1, u2 = us[0], us[1]
        g1 = _turn(pv1, pv, ps[u1], sign)
        g2 = _turn(pv1, ps[u2], pv, sign)
        if l == 2:
            g3 = _turn(pv1, ps[u1], ps[u2], sign)
            if g3 <= 120.0 + EPS_ANG:
                self.cases.append((v, "l=2:u1u2"))
                common([(u1, u2), (r, v1), (v1, v2)], [(v1, att[u1])])
                return v1
            if a1 + g1 <= 195.0 + EPS_ANG:
                self.cases.append((v, "l=2:ru1"))
                common([(r, u1), (v1, v2)], [])
                return u1
            self._check_split(a2 + g2, v)
            self.cases.append((v, "l=2:u2v2"))
            common([(r, v1), (u2, v2)], [])
            return v1
        if l == 4:
            u3, u4 = us[2], us[3]
            self.cases.append((v, "l=4"))
            common([(r, u1), (u2, v2), (u3, u4)], [(v1, att[u3])])
            return u1
        u3 = us[2]
        g3 = _turn(pv1, ps[u3], ps[u2], sign)
        g4 = _turn(pv1, ps[u1], ps[u3], sign)
        if max(g3, g4) >= 120.0 - EPS_ANG:
            self.cases.append((v, "l=3:wide"))
            common([(r, u1), (u2, v2)], [])
            return u1
        if a1 + g1 <= 195.0 + EPS_ANG:
            self.cases.append((v, "l=3:ru1"))
            common([(r, u1), (u2, u3), (v1, v2)], [(v1, att[u2])])
            return u1
        self._check_split(a2 + g2, v)
        self.cases.append((v, "l=3:rv1"))
        common([(r, v1), (u1, u3), (u2, v2)], [(v1, att[u1])])
        return v1

    @staticmethod
    def _check_split(total: float, v: int):
        if total > 195.0 + EPS_ANG:
            raise LemmaViolated(f"both angle sums at vertex {v} exceed 195 degrees")

    def result_tree(self) -> Tree:
        n = self.rt.tree.n
        return Tree(n, tuple((i, j) for i in range(n) for j in self.adj[i] if i < j))


def _check_input(rt: RootedTree):
    t = rt.tree
    if t.n > 1 and len(rt.children[rt.root]) != 1:
        raise PreconditionViolated(f"root {rt.root} is not a leaf")
    if t.max_degree() > 5:
        raise PreconditionViolated(f"input has maximum degree {t.max_degree()} > 5")


def _transform(rt: RootedTree, ps: PointSet, mode: str, K: int) -> DegreeBoundedTree:
    _check_input(rt)
    base = bottleneck(rt.tree, ps)
    factor = FACTORS[K]
    if rt.tree.n <= 2:
        child = rt.children[rt.root][0] if rt.tree.n == 2 else NO_PARENT
        return DegreeBoundedTree(rt.tree, K, base, base, factor, {}, (), rt.root, child)
    rw = _Rewriter(rt, ps, mode)
    rw.run()
    out = rw.result_tree()
    deg = out.degrees()
    child = rt.children[rt.root][0]
    if not out.is_spanning_tree():
        raise GuaranteeViolated("transform output is not a spanning tree")
    if max(deg) > K or deg[rt.root] != 1 or deg[child] > K - 1:
        raise GuaranteeViolated(f"degree bound broken: max {max(deg)}, root {deg[rt.root]}, child {deg[child]}")
    return DegreeBoundedTree(out, K, bottleneck(out, ps), base, factor, dict(rw.attach), tuple(rw.added), rt.root, child, tuple(rw.cases))


def degree4_transform(rt: RootedTree, ps: PointSet) -> DegreeBoundedTree:
    """Spanning tree of maximum degree 4 with bottleneck <= sqrt(2) times the input's.

    ``rt`` must be a degree-5 normalized EMST rooted at a leaf.
    """
    return _transform(rt, ps, "deg4", 4)


def degree3_transform(rt: RootedTree, ps: PointSet) -> DegreeBoundedTree:
    """Spanning tree of maximum degree 3 with bottleneck <= sqrt(3) times the input's.

    A vertex with four children is handled together with the children of one
    of them (the one bounding the smaller pair of angles next to the parent).
    """
    return _transform(rt, ps, "deg3", 3)


def degree2_path(t: Tree, ps: PointSet) -> DegreeBoundedTree:
    """Hamiltonian path whose consecutive vertices are at most 3 hops apart in ``t``.

    The path through a subtree starts at its top vertex and ends at one of its
    children; child subtrees are walked in radial order, each in reverse.
    """
    base = bottleneck(t, ps)
    if t.max_degree() <= 2:
        # already a path (or a single point)
        return DegreeBoundedTree(t, 2, base, base, 3.0)
    rt = root_at_leaf(t, ps)
    order: list[int] = []
    stack = [(rt.root, True, False)]
    while stack:
        v, forward, emit = stack.pop()
        if emit:
            order.append(v)
            continue
        kids = rt.children[v]
        if forward:
            steps = [(v, True, True)] + [(c, False, False) for c in kids]
        else:
            steps = [(c, True, False) for c in reversed(kids)] + [(v, True, True)]
        stack.extend(reversed(steps))
    path = Tree(t.n, tuple(zip(order, order[1:])))
    return DegreeBoundedTree(path, 2, bottleneck(path, ps), base, 3.0, {}, (), rt.root)


def path_order(t: Tree) -> list[int]:
    """Vertices of a path-shaped tree from one end to the other."""
    if t.n == 1:
        return [0]
    adj = t.adjacency()
    ends = [v for v in range(t.n) if len(adj[v]) == 1]
    if len(ends) != 2 or t.max_degree() > 2:
        raise ValueError("tree is not a path")
    order = [min(ends)]
    prev = -1
    while len(order) < t.n:
        nxt = [w for w in adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def bounded_degree_tree(ps: PointSet, K: int) -> DegreeBoundedTree:
    """EMST followed by the transform for degree bound ``K`` in {2, 3, 4}."""
    if K not in FACTORS:
        raise ValueError(f"degree bound must be 2, 3 or 4, got {K}")
    t = compute_emst(ps)
    if K == 2:
        return degree2_path(t, ps)
    rt = root_at_leaf(t, ps)
    return degree4_transform(rt, ps) if K == 4 else degree3_transform(rt, ps)
