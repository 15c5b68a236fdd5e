"""Command-line front end: ``planetrees {enumerate,map,count,table,stats,verify}``.

Exit status: 0 on success, 1 on a data or verification failure, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import asdict

from . import bijections as bj
from .counting import (
    catalan,
    count_old,
    count_old_young,
    count_young,
    joint_distribution,
    motzkin,
    narayana,
)
from .objects import (
    COLORED2,
    CONTRACTED,
    DYCK,
    LatticePath,
    enumerate_objects,
    parse_perm,
    parse_tree,
    render_perm,
    render_tree,
)
from .stats import (
    drops,
    factor_count,
    old_young,
    peaks_at_even_height,
    perm_stats,
    tree_stats,
    triple_falls,
)
from .verify import CAPS, SUITES, CapError, run_suite

OBJECTS = {
    "tree": "tree",
    "dyck": "dyck",
    "motzkin": "motzkin",
    "2motzkin": "colored2",
    "colored2": "colored2",
    "3motzkin": "colored3",
    "colored3": "colored3",
    "av321": "av321",
    "av132": "av132",
}

ENUMERATE_CAP = 14
TABLE_CAP = 12


def _path_codec(kind):
    return (lambda s: LatticePath(kind, s)), (lambda p: p.steps)


_TREE = (parse_tree, render_tree)
_PERM = (parse_perm, render_perm)
_DYCK = _path_codec(DYCK)
_CONTRACTED = _path_codec(CONTRACTED)
_COLORED2 = _path_codec(COLORED2)

# name -> (forward, inverse, domain codec, codomain codec)
BIJECTIONS = {
    "pre": (bj.pre, bj.pre_inv, _TREE, _DYCK),
    "dgr": (bj.dgr, bj.dgr_inv, _TREE, _DYCK),
    "contract": (bj.contract_udu, bj.expand_udu, _DYCK, _CONTRACTED),
    "callan": (bj.callan_reduce, bj.callan_expand, _CONTRACTED, _COLORED2),
    "phi": (bj.phi, bj.phi_inv, _TREE, _COLORED2),
    "psi": (bj.psi, bj.psi_inv, _TREE, _COLORED2),
    "inflate": (bj.inflate, bj.deflate, _COLORED2, _DYCK),
    "krat-uc": (bj.krat_uc, bj.krat_uc_inv, _PERM, _DYCK),
    "krat": (bj.krat, bj.krat_inv, _PERM, _DYCK),
    "alpha": (bj.alpha, bj.alpha_inv, _TREE, _PERM),
    "beta": (bj.beta, bj.beta_inv, _TREE, _PERM),
    "gamma": (bj.gamma, bj.gamma_inv, _TREE, _PERM),
    "delta": (bj.delta, bj.delta_inv, _TREE, _PERM),
}


def _lines(stream):
    for lineno, raw in enumerate(stream, 1):
        yield lineno, raw.rstrip("\r\n").rstrip()


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cmd_enumerate(args, out) -> int:
    kind = OBJECTS[args.object]
    if (args.old is not None or args.young is not None) and kind != "tree":
        args.parser.error("--old/--young filter trees only")
    if args.n > args.cap:
        args.parser.error(f"--n {args.n} exceeds --cap {args.cap}")
    for obj in enumerate_objects(kind, args.n):
        if kind == "tree":
            o, y = old_young(obj)
            if args.old is not None and o != args.old:
                continue
            if args.young is not None and y != args.young:
                continue
            text = render_tree(obj)
            record = {"edges": args.n, "old": o, "tree": text, "young": y}
        elif kind.startswith("av"):
            text = render_perm(obj)
            record = {"class": kind, "perm": text}
        else:
            text = obj.steps
            record = {"kind": kind, "path": text}
        out.write((_dumps(record) if args.format == "json" else text) + "\n")
    return 0


def cmd_map(args, out, stdin, err) -> int:
    fwd, inv, dom, cod = BIJECTIONS[args.bijection]
    fn, (parse, _), (_, render) = (inv, cod, dom) if args.inverse else (fwd, dom, cod)
    status = 0
    for lineno, line in _lines(stdin):
        try:
            out.write(render(fn(parse(line))) + "\n")
        except (ValueError, AssertionError) as exc:
            err.write(f"line {lineno}: {exc}\n")
            status = 1
    return status


def cmd_count(args, out) -> int:
    need = {"narayana": ("k",), "old-young": ("i", "j"), "old": ("k",), "young": ("k",)}
    for name in need.get(args.formula, ()):
        if getattr(args, name) is None:
            args.parser.error(f"--formula {args.formula} needs --{name}")
    try:
        value = {
            "catalan": lambda: catalan(args.n),
            "motzkin": lambda: motzkin(args.n),
            "narayana": lambda: narayana(args.n, args.k),
            "old-young": lambda: count_old_young(args.n, args.i, args.j),
            "old": lambda: count_old(args.n, args.k),
            "young": lambda: count_young(args.n, args.k),
        }[args.formula]()
    except ValueError as exc:
        args.parser.error(str(exc))
    out.write(f"{value}\n")
    return 0


def joint_table(n: int) -> list[dict]:
    """Rows of (old, young, enumerated, formula) for every nonzero profile."""
    hist = Counter(old_young(t) for t in enumerate_objects("tree", n))
    formula = joint_distribution(n) if n >= 1 else {(0, 0): 1}
    keys = sorted(set(hist) | set(formula))
    return [
        {"old": i, "young": j, "enumerated": hist.get((i, j), 0), "formula": formula.get((i, j), 0)}
        for i, j in keys
    ]


def cmd_table(args, out) -> int:
    if args.n > args.cap:
        args.parser.error(f"--n {args.n} exceeds --cap {args.cap}")
    rows = joint_table(args.n)
    if args.format == "json":
        out.write(_dumps({"n": args.n, "rows": rows, "total": catalan(args.n)}) + "\n")
    else:
        out.write("old,young,enumerated,formula\n")
        for r in rows:
            out.write(f"{r['old']},{r['young']},{r['enumerated']},{r['formula']}\n")
    return 0 if all(r["enumerated"] == r["formula"] for r in rows) else 1


def cmd_stats(args, out, stdin, err) -> int:
    status = 0
    for lineno, line in _lines(stdin):
        try:
            if args.object == "tree":
                record = asdict(tree_stats(parse_tree(line)))
            elif args.object == "perm":
                record = asdict(perm_stats(parse_perm(line)))
            else:
                p = LatticePath(DYCK, line)
                record = {
                    "drops": drops(p),
                    "dud": factor_count(p, "DUD"),
                    "peaks_at_even_height": peaks_at_even_height(p),
                    "triple_falls": triple_falls(p),
                    "udu": factor_count(p, "UDU"),
                }
        except ValueError as exc:
            err.write(f"line {lineno}: {exc}\n")
            status = 1
            continue
        out.write(_dumps(record) + "\n")
    return status


def cmd_verify(args, out, err) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    status = 0
    for suite in suites:
        n_max = args.n_max if args.suite != "all" else min(args.n_max, CAPS[suite])
        try:
            report = run_suite(suite, n_max, args.variant, cap=not args.no_cap)
        except CapError as exc:
            args.parser.error(str(exc))
        out.write(report.render() + "\n")
        out.flush()
        err.write(f"{suite}: {report.wall_time:.2f}s\n")
        if not report.ok:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planetrees",
        description="Plane trees by old and young leaves: enumeration, bijections, counts and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every object of a kind and size, one per line")
    p.add_argument("--object", required=True, choices=sorted(OBJECTS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--old", type=int)
    p.add_argument("--young", type=int)
    p.add_argument("--format", choices=("compact", "json"), default="compact")
    p.add_argument("--cap", type=int, default=ENUMERATE_CAP, help="refuse larger --n (default %(default)s)")

    p = sub.add_parser("map", help="apply a bijection to each stdin line")
    p.add_argument("--bijection", required=True, choices=sorted(BIJECTIONS))
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("count", help="evaluate a closed-form count")
    p.add_argument(
        "--formula", required=True, choices=("catalan", "motzkin", "narayana", "old-young", "old", "young")
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("table", help="joint (old, young) distribution: enumeration vs formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cap", type=int, default=TABLE_CAP, help="refuse larger --n (default %(default)s)")

    p = sub.add_parser("stats", help="statistics of each stdin object as a JSON line")
    p.add_argument("--object", required=True, choices=("tree", "perm", "dyck"))

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--variant", choices=("corrected", "printed"), default="corrected")
    p.add_argument("--no-cap", action="store_true", help="allow n-max beyond the suite's cap")

    for sp in sub.choices.values():
        sp.set_defaults(parser=sp)
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate":
        return cmd_enumerate(args, out)
    if args.command == "map":
        return cmd_map(args, out, stdin, err)
    if args.command == "count":
        return cmd_count(args, out)
    if args.command == "table":
        return cmd_table(args, out)
    if args.command == "stats":
        return cmd_stats(args, out, stdin, err)
    return cmd_verify(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
