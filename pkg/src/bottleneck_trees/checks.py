"""Numeric checkers for structural properties of Euclidean MSTs and for transform outputs.

Checkers never raise on a violation; they collect certificates in a
:class:`CheckReport` so that a run over many trees can be summarized.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .emst import Tree, bottleneck
from .geometry import EPS_ANG, EPS_LEN, PointSet, angle_at, dist, orient, radial_gaps, radial_order
from .transforms import SQRT3, DegreeBoundedTree

LEMMAS = ("lemma1", "lemma2", "two-angle", "abu-affash")


@dataclass
class CheckReport:
    lemma: str
    trials: int = 1
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.lemma, self.trials + other.trials, self.violations + other.violations)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _neighbors_sorted(t: Tree, ps: PointSet) -> list[list[int]]:
    return [radial_order(v, nb, ps) if len(nb) > 1 else nb for v, nb in enumerate(t.adjacency())]


def check_lemma1(t: Tree, ps: PointSet) -> CheckReport:
    """Angle bounds at vertices of degree 3, 4 and 5 (and no vertex above 5)."""
    rep = CheckReport("lemma1")
    for v, ring in enumerate(_neighbors_sorted(t, ps)):
        d = len(ring)
        if d < 3:
            continue
        gaps = radial_gaps(v, ring, ps)
        cert = {"vertex": v, "degree": d, "angles": gaps}
        if d > 5:
            rep.violations.append({**cert, "clause": "degree > 5"})
            continue
        if d == 3:
            if min(gaps) > 120.0 + EPS_ANG:
                rep.violations.append({**cert, "clause": "no angle <= 120", "margin": min(gaps) - 120.0})
            continue
        lo_hi = (90.0, 120.0) if d == 4 else (90.0, 90.0)
        ok = any(
            sorted((gaps[i], gaps[j]))[0] <= lo_hi[0] + EPS_ANG and sorted((gaps[i], gaps[j]))[1] <= lo_hi[1] + EPS_ANG
            for i in range(d)
            for j in range(i + 2, d)
            if not (i == 0 and j == d - 1)
        )
        if not ok:
            rep.violations.append({**cert, "clause": f"no nonadjacent pair within {lo_hi}"})
        if d == 5 and max(gaps) > 120.0 + EPS_ANG:
            rep.violations.append({**cert, "clause": "angle above 120 at degree 5", "margin": max(gaps) - 120.0})
    return rep


def check_lemma2(t: Tree, ps: PointSet) -> CheckReport:
    """|pv| <= 2 sin(alpha/2) max(|pu|, |uv|) for adjacent edges pu, uv."""
    rep = CheckReport("lemma2")
    for u, nb in enumerate(t.adjacency()):
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                p, v = nb[a], nb[b]
                alpha = angle_at(ps[u], ps[p], ps[v])
                longest = max(ps.dist(p, u), ps.dist(u, v))
                bound = 2.0 * math.sin(math.radians(alpha) / 2.0) * longest
                pv = ps.dist(p, v)
                if pv > bound + EPS_LEN * longest:
                    rep.violations.append(
                        {"vertices": [p, u, v], "alpha": alpha, "length": pv, "bound": bound, "margin": pv - bound}
                    )
    return rep


def _same_side(ps: PointSet, p: int, u: int, v: int, q: int, tol: float) -> bool:
    luv = ps.dist(u, v)
    sp = orient(ps[u], ps[v], ps[p]) / luv
    sq = orient(ps[u], ps[v], ps[q]) / luv
    return (sp > tol and sq > tol) or (sp < -tol and sq < -tol)


def check_two_angle(t: Tree, ps: PointSet) -> CheckReport:
    """Three-edge paths p-u-v-q with p, q strictly on one side of line uv.

    Checks, with alpha at u and gamma at v:
    alpha + gamma >= 150; alpha <= 80 implies gamma >= 120 - alpha/2;
    alpha + gamma <= 210 implies |pq| <= sqrt(3) max(|pu|, |uv|, |vq|).
    """
    rep = CheckReport("two-angle")
    adj = t.adjacency()
    tol = EPS_LEN * ps.scale()
    for u, v in t.edges:
        for p in adj[u]:
            if p == v:
                continue
            for q in adj[v]:
                if q == u or not _same_side(ps, p, u, v, q, tol):
                    continue
                alpha = angle_at(ps[u], ps[p], ps[v])
                gamma = angle_at(ps[v], ps[u], ps[q])
                path = [p, u, v, q]
                if alpha + gamma < 150.0 - EPS_ANG:
                    rep.violations.append(
                        {"clause": "angle sum >= 150", "vertices": path, "alpha": alpha, "gamma": gamma}
                    )
                for a, g, order in ((alpha, gamma, path), (gamma, alpha, path[::-1])):
                    if a <= 80.0 and g < 120.0 - a / 2.0 - EPS_ANG:
                        rep.violations.append(
                            {"clause": "gamma >= 120 - alpha/2", "vertices": order, "alpha": a, "gamma": g}
                        )
                if alpha + gamma <= 210.0 + EPS_ANG:
                    longest = max(ps.dist(p, u), ps.dist(u, v), ps.dist(v, q))
                    pq = ps.dist(p, q)
                    if pq > SQRT3 * longest * (1.0 + EPS_LEN):
                        rep.violations.append(
                            {
                                "clause": "|pq| <= sqrt(3) max",
                                "vertices": path,
                                "alpha": alpha,
                                "gamma": gamma,
                                "ratio": pq / longest,
                            }
                        )
    return rep


def check_abu_affash(t: Tree, ps: PointSet) -> CheckReport:
    """No other point inside or on the triangle of two adjacent edges."""
    rep = CheckReport("abu-affash")
    xy = ps.coords
    tol = EPS_LEN
    for u, nb in enumerate(t.adjacency()):
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                p, v = nb[a], nb[b]
                hits = _points_in_triangle(xy, p, u, v, tol)
                for w in hits:
                    rep.violations.append({"vertices": [p, u, v], "point": int(w)})
    return rep


def _points_in_triangle(xy: np.ndarray, i: int, j: int, k: int, tol: float) -> list[int]:
    a, b, c = xy[i], xy[j], xy[k]
    scale = max(dist(a, b), dist(b, c), dist(a, c))
    area2 = orient(a, b, c)
    if abs(area2) <= tol * scale * scale:
        p0, p1 = max(((a, b), (b, c), (a, c)), key=lambda e: dist(*e))
        seg = p1 - p0
        L2 = float(seg @ seg)
        t = np.clip(((xy - p0) @ seg) / L2, 0.0, 1.0)
        near = np.hypot(*(xy - (p0 + t[:, None] * seg)).T)
        inside = near <= tol * scale
    else:
        sign = 1.0 if area2 > 0 else -1.0
        slack = tol * scale * scale

        def side(p, q):
            return sign * ((q[0] - p[0]) * (xy[:, 1] - p[1]) - (q[1] - p[1]) * (xy[:, 0] - p[0]))

        inside = (side(a, b) >= -slack) & (side(b, c) >= -slack) & (side(c, a) >= -slack)
    inside[[i, j, k]] = False
    return [int(w) for w in np.flatnonzero(inside)]


def check_all(t: Tree, ps: PointSet) -> dict[str, CheckReport]:
    return {
        "lemma1": check_lemma1(t, ps),
        "lemma2": check_lemma2(t, ps),
        "two-angle": check_two_angle(t, ps),
        "abu-affash": check_abu_affash(t, ps),
    }


def verify_result(ps: PointSet, dbt: DegreeBoundedTree, base: float) -> CheckReport:
    """Independent acceptance check of a transform output against ``base``."""
    rep = CheckReport(f"degree-{dbt.K} result")
    t = dbt.tree
    if t.n != ps.n or not t.is_spanning_tree():
        rep.violations.append({"clause": "spanning tree", "n": t.n, "edges": len(t.edges)})
    deg = t.degrees()
    for v, d in enumerate(deg):
        if d > dbt.K:
            rep.violations.append({"clause": "degree", "vertex": v, "degree": d, "bound": dbt.K})
    b = bottleneck(t, ps)
    limit = dbt.factor * base
    if b > limit + EPS_LEN * max(base, 1e-300):
        rep.violations.append({"clause": "bottleneck", "bottleneck": b, "bound": limit, "margin": b - limit})
    return rep


def two_angle_ratio(alpha: float, gamma: float, pu: float, uv: float = 1.0, vq: float = 1.0) -> float:
    """|pq| / max(|pu|, |uv|, |vq|) for a path p-u-v-q with p, q on the same side of uv.

    Used to probe how sharp the 210 degree threshold of the sqrt(3) bound is.
    """
    u = (0.0, 0.0)
    v = (uv, 0.0)
    p = (pu * math.cos(math.radians(alpha)), pu * math.sin(math.radians(alpha)))
    q_dir = math.radians(180.0 - gamma)
    q = (uv + vq * math.cos(q_dir), vq * math.sin(q_dir))
    return dist(p, q) / max(pu, uv, vq)
