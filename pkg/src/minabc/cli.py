"""Command-line interface: solve orders, export trees, run verification.

Exit codes: 0 success (and zero violations for ``verify``), 1
verification violations, 2 usage errors, 3 infeasible order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext

from . import scans
from .transforms import TRANSFORM_IDS
from .family import FamilyParams, closed_form_abc, materialize, root_degree
from .oracle import OrderCapExceeded, brute_min_abc
from .solver import (
    HP_REQUIRED_ORDER,
    InfeasibleOrderError,
    SolveResult,
    solve,
)
from .trees import Tree, abc_index

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def format_binary64(value: float) -> str:
    """17 significant digits: enough to round-trip binary64, locale-free."""
    return f"{value:.16e}"


def format_hp(value: Decimal) -> str:
    """32 significant digits of the high-precision value."""
    with localcontext() as ctx:
        ctx.prec = 32
        return f"{+value:.31e}"


def output_record(result: SolveResult, hp_ran: bool) -> dict:
    p = result.best
    return {
        "n": result.n,
        "z": p.z,
        "n_z": p.n_z,
        "n_zp1": p.n_zp1,
        "n3": p.n3,
        "n4": p.n4,
        "b_star": p.b_star,
        "b1": p.b1,
        "b2": p.b2,
        "b3": p.b3,
        "b4": p.b4,
        "k1": p.k1,
        "k2": p.k2,
        "root_degree": root_degree(p),
        "abc": format_binary64(closed_form_abc(p)),
        "abc_hp": format_hp(result.abc_value_hp) if hp_ran else None,
        "validity": "characterized" if result.characterized else "advisory",
    }


def record_to_params(record: dict) -> FamilyParams:
    return FamilyParams(
        z=record["z"], n_z=record["n_z"], n_zp1=record["n_zp1"],
        n3=record["n3"], n4=record["n4"], b_star=record["b_star"],
        b1=record["b1"], b2=record["b2"], k1=record["k1"], k2=record["k2"],
    )


def _print_solve(result: SolveResult, hp_ran: bool, out) -> None:
    p = result.best
    rec = output_record(result, hp_ran)
    print(f"order n          : {result.n}", file=out)
    print(f"branch size z    : {p.z}", file=out)
    print(f"size-z branches  : {p.n_z}", file=out)
    print(f"size-z+1 branches: {p.n_zp1}", file=out)
    print(f"root 3-leg hubs  : {p.n3}", file=out)
    print(f"root 4-leg hubs  : {p.n4}", file=out)
    if p.b_star:
        print("modified branch  : forked (b_star)", file=out)
    if p.b1:
        print(f"modified branch  : one two-leg hub, size {p.k1}", file=out)
    if p.b2:
        print(f"modified branch  : two two-leg hubs, size {p.k2}", file=out)
    print(f"root degree      : {rec['root_degree']}", file=out)
    print(f"abc              : {rec['abc']}", file=out)
    if hp_ran:
        print(f"abc (32 digits)  : {rec['abc_hp']}", file=out)
    print(f"validity         : {rec['validity']}", file=out)
    if result.ties:
        print(f"ties             : {len(result.ties)} equal-value parameter set(s)", file=out)
        for t in result.ties:
            print(f"                   {t}", file=out)


def cmd_solve(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        result = solve(args.n, prune=not args.no_prune, hp=args.hp)
    except InfeasibleOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    hp_ran = bool(args.hp) or args.n > HP_REQUIRED_ORDER or bool(result.ties)
    if args.json:
        print(json.dumps(output_record(result, hp_ran)), file=out)
    else:
        _print_solve(result, hp_ran, out)
    return EXIT_OK


def edges_text(tree: Tree) -> str:
    lines = [f"n {tree.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in tree.edges())
    return "\n".join(lines) + "\n"


def dot_text(tree: Tree) -> str:
    deg = tree.degrees()
    lines = ["digraph tree {"]
    lines.append(f'  0 [label="root deg={deg[0]}"];')
    for v in range(1, tree.vertex_count):
        lines.append(f'  {v} [label="deg={deg[v]}"];')
    # parent -> child orientation from a rooted traversal
    seen = [False] * tree.vertex_count
    seen[tree.root] = True
    stack = [tree.root]
    order = []
    while stack:
        u = stack.pop()
        for v in sorted(tree.adjacency[u], reverse=True):
            if not seen[v]:
                seen[v] = True
                order.append((u, v))
                stack.append(v)
    lines.extend(f"  {u} -> {v};" for u, v in order)
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        result = solve(args.n, prune=not args.no_prune)
    except InfeasibleOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    tree = materialize(result.best)
    text = edges_text(tree) if args.format == "edges" else dot_text(tree)
    try:
        with open(args.path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.format} for n={args.n} to {args.path}", file=out)
    return EXIT_OK


_VERIFY_SCOPES = ("all", "props") + TRANSFORM_IDS


def cmd_verify(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    reports = scans.verify(args.scope, samples=args.samples, seed=args.seed)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]), file=out)
    else:
        for r in reports:
            print(r.to_text(), file=out)
    ok = all(r.passed for r in reports)
    total = sum(r.violations for r in reports)
    print(f"verify {args.scope}: {'PASS' if ok else 'FAIL'} ({total} violations)", file=out)
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_brute(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        result = brute_min_abc(args.n)
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps({
            "n": result.n,
            "searched": result.searched,
            "abc": format_binary64(result.abc_value),
            "argmins": [t.edges() for t in result.trees],
        }), file=out)
        return EXIT_OK
    print(f"searched {result.searched} isomorphism classes of order {args.n}", file=out)
    print(f"minimum abc: {format_binary64(result.abc_value)}", file=out)
    print(f"argmins: {len(result.trees)}", file=out)
    for u, v in result.tree.edges():
        print(f"{u} {v}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minabc",
        description="Minimal-ABC tree parameters: exact solving, exporting, "
                    "and numerical verification of the underlying bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="minimize the ABC objective at one order")
    p_solve.add_argument("n", type=int)
    p_solve.add_argument("--hp", action="store_true", help="force 32-digit re-ranking")
    p_solve.add_argument("--no-prune", action="store_true",
                         help="scan the full constraint box (slow, oracle mode)")
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                         help="worker threads for range solves (ignored for one order)")
    p_solve.set_defaults(func=cmd_solve)

    p_export = sub.add_parser("export", help="materialize the optimal tree to a file")
    p_export.add_argument("n", type=int)
    p_export.add_argument("--format", choices=("edges", "dot"), default="edges")
    p_export.add_argument("--no-prune", action="store_true")
    p_export.add_argument("path")
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="run negativity scans / property checks")
    p_verify.add_argument("scope", choices=_VERIFY_SCOPES)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--samples", type=int, default=100_000)
    p_verify.add_argument("--seed", type=int, default=20240901)
    p_verify.set_defaults(func=cmd_verify)

    p_brute = sub.add_parser("brute", help="exhaustive search over small trees")
    p_brute.add_argument("n", type=int)
    p_brute.add_argument("--json", action="store_true")
    p_brute.set_defaults(func=cmd_brute)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
