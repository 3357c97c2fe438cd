"""Command line interface: ``bottleneck-trees <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import repro as repro_mod
from .checks import check_abu_affash, check_lemma1, check_lemma2, check_two_angle, verify_result
from .constructions import NAMES, generate
from .emst import bottleneck, compute_emst, root_at_leaf
from .errors import BottleneckTreeError
from .exact import exact_bottleneck_tree, ratio
from .io import exact_report, ratio_report, read_points, tree_report, write_points
from .svg import render_svg
from .transforms import degree2_path, degree3_transform, degree4_transform

DEFAULT_BUDGET = {2: 20, 3: 12, 4: 12, 5: 12}
CHECKERS = {
    "1": ("lemma1", check_lemma1),
    "2": ("lemma2", check_lemma2),
    "two-angle": ("two-angle", check_two_angle),
    "abu-affash": ("abu-affash", check_abu_affash),
}


class UsageError(Exception):
    pass


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _figures(args, ps, layers):
    if getattr(args, "svg", None):
        with open(args.svg, "w") as fh:
            fh.write(render_svg(ps, layers))
    if getattr(args, "plot", None):
        from .plotting import plot_trees

        plot_trees(ps, layers, args.plot)


def cmd_gen(args, out):
    ps = generate(args.name, radius=args.radius, n=args.n, seed=args.seed)
    header = f"{args.name} radius={args.radius}" if args.name != "random" else f"random n={args.n} seed={args.seed}"
    write_points(ps, args.output, header, stdout=out)
    return 0


def cmd_emst(args, out):
    ps = read_points(args.file)
    t = compute_emst(ps)
    b = bottleneck(t, ps)
    _figures(args, ps, [(t, "emst")])
    _emit(tree_report(ps, t, None, b, 1.0), out)
    return 0


def cmd_tree(args, out):
    ps = read_points(args.file)
    mst = compute_emst(ps)
    base = bottleneck(mst, ps)
    if args.degree == 2:
        res = degree2_path(mst, ps)
    else:
        rt = root_at_leaf(mst, ps)
        res = degree4_transform(rt, ps) if args.degree == 4 else degree3_transform(rt, ps)
    check = verify_result(ps, res, base)
    if not check.passed:
        print(f"error: result failed verification: {check.violations}", file=sys.stderr)
        return 1
    _figures(args, ps, [(mst, "emst"), (res.tree, f"degree{args.degree}")])
    _emit(tree_report(ps, res.tree, args.degree, base, res.factor), out)
    return 0


def _budget(args, ps):
    limit = args.max_exact_n if args.max_exact_n is not None else DEFAULT_BUDGET[args.degree]
    if ps.n > limit:
        raise UsageError(f"n = {ps.n} exceeds the exact-solver budget {limit} (raise with --max-exact-n)")


def cmd_exact(args, out):
    ps = read_points(args.file)
    _budget(args, ps)
    _emit(exact_report(exact_bottleneck_tree(ps, args.degree)), out)
    return 0


def cmd_ratio(args, out):
    ps = read_points(args.file)
    _budget(args, ps)
    _emit(ratio_report(ratio(ps, args.degree)), out)
    return 0


def cmd_check(args, out):
    ps = read_points(args.file)
    t = compute_emst(ps)
    keys = list(CHECKERS) if args.lemma == "all" else [args.lemma]
    reports = {CHECKERS[k][0]: CHECKERS[k][1](t, ps) for k in keys}
    _emit({name: rep.to_dict() for name, rep in reports.items()}, out)
    return 0 if all(r.passed for r in reports.values()) else 1


def cmd_repro(args, out):
    res = repro_mod.run(args.name)
    out.write(res.line() + "\n")
    if args.json:
        _emit({"name": res.name, "measured": res.measured, "expected": res.expected,
               "passed": res.passed, **res.details}, out)
    if args.figure_dir:
        from .plotting import plot_trees

        os.makedirs(args.figure_dir, exist_ok=True)
        base = os.path.join(args.figure_dir, res.name)
        plot_trees(res.points, res.layers, base + ".png", title=res.line(), labels=True)
        with open(base + ".svg", "w") as fh:
            fh.write(render_svg(res.points, res.layers))
    return 0 if res.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bottleneck-trees", description="Euclidean bottleneck bounded-degree spanning trees")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named point set")
    p.add_argument("name", choices=NAMES)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    def figure_opts(p):
        p.add_argument("--json", action="store_true", help="JSON report on stdout (the default)")
        p.add_argument("--svg", metavar="OUT", help="also write an SVG drawing")
        p.add_argument("--plot", metavar="OUT", help="also write a matplotlib figure (png/pdf/svg by suffix)")

    p = sub.add_parser("emst", help="Euclidean MST report")
    p.add_argument("file")
    figure_opts(p)
    p.set_defaults(func=cmd_emst)

    p = sub.add_parser("tree", help="degree-bounded approximation")
    p.add_argument("file")
    p.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)
    figure_opts(p)
    p.set_defaults(func=cmd_tree)

    for name, func, degrees, help_ in (
        ("exact", cmd_exact, (2, 3, 4, 5), "exact bottleneck degree-K tree"),
        ("ratio", cmd_ratio, (2, 3, 4, 5), "exact degree-K bottleneck over MST bottleneck"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--degree", type=int, choices=degrees, required=True)
        p.add_argument("--max-exact-n", type=int, default=None,
                       help="largest n to attempt (default 20 for degree 2, 12 otherwise)")
        p.set_defaults(func=func)

    p = sub.add_parser("check", help="structural MST checks; exit 1 on any violation")
    p.add_argument("file")
    p.add_argument("--lemma", choices=("1", "2", "two-angle", "abu-affash", "all"), default="all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("repro", help="reproduce a known bound on its witness set")
    p.add_argument("name", choices=tuple(repro_mod.REPRODUCTIONS))
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure-dir", metavar="DIR", help="write PNG and SVG figures of the witness")
    p.set_defaults(func=cmd_repro)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, BottleneckTreeError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
