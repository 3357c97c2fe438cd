"""One-shot reproductions of the known bounds on the witness point sets."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .checks import verify_result
from .constructions import SQRT7, generate
from .emst import Tree, bottleneck, compute_emst, root_at_leaf
from .exact import exact_bottleneck_tree
from .transforms import SQRT3, degree3_transform

TOL = 1e-9


@dataclass
class Reproduction:
    name: str
    measured: float
    expected: float
    expected_label: str
    passed: bool
    details: dict = field(default_factory=dict)
    layers: list = field(default_factory=list, repr=False)
    points: object = field(default=None, repr=False)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.name}: measured {self.measured:.12f} expected {self.expected:.12f} ({self.expected_label}) {verdict}"


def _exact_ratio(name: str, K: int):
    ps = generate(name)
    mst = compute_emst(ps)
    base = bottleneck(mst, ps)
    ex = exact_bottleneck_tree(ps, K)
    return ps, mst, base, ex


def beta2_sqrt7() -> Reproduction:
    ps, mst, base, ex = _exact_ratio("lower19", 2)
    ok = abs(ex.value - SQRT7) <= TOL and abs(base - 1.0) <= TOL
    return Reproduction(
        "beta2-sqrt7", ex.value, SQRT7, "sqrt(7)", ok,
        {"n": ps.n, "emstBottleneck": base, "exactPath": ex.value, "ratio": ex.value / base},
        [(mst, "emst"), (ex.witness, "exact")], ps,
    )


def beta3_sqrt2() -> Reproduction:
    ps, mst, base, ex = _exact_ratio("square_center", 3)
    approx = degree3_transform(root_at_leaf(mst, ps), ps)
    ratio = ex.value / base
    ok = (
        abs(ratio - math.sqrt(2.0)) <= TOL
        and approx.ratio <= SQRT3 + TOL
        and verify_result(ps, approx, base).passed
    )
    return Reproduction(
        "beta3-sqrt2", ratio, math.sqrt(2.0), "sqrt(2)", ok,
        {"exact": ex.value, "emstBottleneck": base, "degree3Ratio": approx.ratio},
        [(mst, "emst"), (ex.witness, "exact"), (approx.tree, "degree3")], ps,
    )


def beta4_pentagon() -> Reproduction:
    ps, mst, base, ex = _exact_ratio("pentagon_center", 4)
    expected = 2.0 * math.sin(math.radians(36.0))
    ratio = ex.value / base
    ok = abs(ratio - expected) <= TOL and ratio > 1.175
    return Reproduction(
        "beta4-pentagon", ratio, expected, "2 sin 36deg", ok,
        {"exact": ex.value, "emstBottleneck": base},
        [(mst, "emst"), (ex.witness, "exact")], ps,
    )


def spider_beta2() -> Reproduction:
    ps, mst, base, ex = _exact_ratio("spider_beta2", 2)
    ratio = ex.value / base
    ok = abs(ratio - 2.0) <= TOL
    return Reproduction(
        "spider-beta2", ratio, 2.0, "2", ok,
        {"exact": ex.value, "emstBottleneck": base},
        [(mst, "emst"), (ex.witness, "exact")], ps,
    )


REPRODUCTIONS = {
    "beta2-sqrt7": beta2_sqrt7,
    "beta3-sqrt2": beta3_sqrt2,
    "beta4-pentagon": beta4_pentagon,
    "spider-beta2": spider_beta2,
}


def run(name: str) -> Reproduction:
    return REPRODUCTIONS[name]()
