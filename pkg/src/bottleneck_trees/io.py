"""Point files and JSON-ready report documents."""
from __future__ import annotations

import sys
from typing import Optional, TextIO

from .emst import Tree, bottleneck
from .exact import ExactResult, RatioReport
from .geometry import PointSet


def parse_points(text: str) -> PointSet:
    """Parse whitespace-separated ``x y`` lines; ``#`` comments and blank lines are skipped."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two numbers, got {len(parts)} field(s)")
        try:
            pts.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: not a number: {line!r}") from None
    if not pts:
        raise ValueError("no points in input")
    return PointSet(pts)


def format_points(ps: PointSet, header: Optional[str] = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += [f"{p.x:.17g} {p.y:.17g}" for p in ps]
    return "\n".join(lines) + "\n"


def read_points(path: str, stdin: Optional[TextIO] = None) -> PointSet:
    if path == "-":
        return parse_points((stdin or sys.stdin).read())
    with open(path) as fh:
        return parse_points(fh.read())


def write_points(ps: PointSet, path: str, header: Optional[str] = None, stdout: Optional[TextIO] = None):
    text = format_points(ps, header)
    if path == "-":
        (stdout or sys.stdout).write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def tree_report(ps: PointSet, t: Tree, k: Optional[int], base: float, guarantee: Optional[float]) -> dict:
    b = bottleneck(t, ps)
    return {
        "n": t.n,
        "k": k,
        "edges": [list(e) for e in t.edges],
        "bottleneck": b,
        "maxDegree": t.max_degree(),
        "baseBottleneck": base,
        "ratio": b / base if base > 0 else 1.0,
        "guarantee": guarantee,
    }


def exact_report(res: ExactResult) -> dict:
    return {
        "k": res.K,
        "n": res.witness.n,
        "value": res.value,
        "witness": [list(e) for e in res.witness.edges],
        "maxDegree": res.witness.max_degree(),
    }


def ratio_report(rep: RatioReport) -> dict:
    return {"k": rep.K, "exactValue": rep.exact_value, "bstValue": rep.bst_value, "ratio": rep.ratio}
