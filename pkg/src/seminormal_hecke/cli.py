"""``seminormal`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench as bench_mod
from .expansion import NonstandardTableauError, check_standard, expand
from .modular import verify_submodule_fn, verify_submodule_tleq
from .seminormal import base_change
from .specht import DimensionLimitError, gram_matrix
from .tableaux import (
    Tableau,
    james_murphy_tableau,
    parse_partition,
    partition_text,
    removable_nodes,
)
from .verify import MODULAR_ORDERS, SUITES, run_suites

GRAM_ROUTES = ("seminormal", "definitional", "oracle")
DEFAULT_SEED = 20240229


def _node(text: str) -> tuple[int, int]:
    try:
        r, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"node must look like r,c: {text!r}") from None
    return r, c


def _shape(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tableau(text: str) -> Tableau:
    try:
        return Tableau.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", type=_shape, help="partition, e.g. 3,2,2")
    common.add_argument("--tableau", type=_tableau, help="rows joined by /, e.g. 1,2,7/3,4/5,6")
    common.add_argument("--node", type=_node, help="removable node r,c (1-based)")
    common.add_argument("--method", help="construction method or Gram route")
    common.add_argument("--e", type=int, action="append", help="order of the root of unity (repeatable)")
    common.add_argument("--r", type=int, help="cut point for t<= submodules")
    common.add_argument("--max-n", type=int, default=6)
    common.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    common.add_argument("--format", choices=("json", "text", "csv"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--repeats", type=int, default=3, help="bench timing repeats")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="seminormal", description="Seminormal bases of Hecke algebra Specht modules.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("expand", parents=[common], help="f_t in the standard basis")
    sub.add_parser("basechange", parents=[common], help="M, M^-1 and the norms gamma_t")
    sub.add_parser("gram", parents=[common], help="Gram matrix of the standard basis")
    sub.add_parser("verify", parents=[common], help="run verification suites")
    sub.add_parser("modular", parents=[common], help="submodule reports at roots of unity")
    sub.add_parser("bench", parents=[common], help="stepwise vs fast on fat hooks")
    return p


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _matrix_text(title: str, order, rows) -> str:
    lines = [title]
    for t, row in zip(order, rows):
        lines.append(f"  [{t}]  " + "  ".join(str(c) for c in row))
    return "\n".join(lines)


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(f"seminormal {args.command}: missing --{', --'.join(m.replace('_', '-') for m in missing)}")


def cmd_expand(args) -> int:
    _need(args, "shape")
    if args.tableau is None:
        if args.node is None:
            raise SystemExit("seminormal expand: give --tableau or --node")
        t = james_murphy_tableau(args.shape, args.node)
    else:
        t = args.tableau
    check_standard(t, args.shape)
    exp = expand(t, args.method or "fast")
    _emit(args, exp.text() if args.format == "text" else exp.dumps())
    return 0


def cmd_basechange(args) -> int:
    _need(args, "shape")
    bc = base_change(args.shape, args.method or "fast")
    if args.format == "text":
        out = "\n".join([
            _matrix_text("M (row t = f_t in the e-basis):", bc.order, bc.M),
            _matrix_text("M^-1:", bc.order, bc.Minv),
            _matrix_text("gamma:", bc.order, [[g] for g in bc.gammas]),
        ])
    else:
        out = _dump(bc.to_json())
    _emit(args, out)
    return 0


def cmd_gram(args) -> int:
    _need(args, "shape")
    route = args.method or "seminormal"
    if route not in GRAM_ROUTES:
        raise SystemExit(f"seminormal gram: --method must be one of {', '.join(GRAM_ROUTES)}")
    g = gram_matrix(args.shape, route)
    _emit(args, _matrix_text(f"Gram matrix ({route}):", g.order, g.entries) if args.format == "text" else _dump(g.to_json()))
    return 0


def cmd_verify(args) -> int:
    names = "all" if args.suite == "all" else args.suite.split(",")
    results = run_suites(names, args.max_n, jobs=args.jobs)
    ok = all(r.passed for r in results)
    if args.format == "text":
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.checked} checks, {len(r.failures)} failures" for r in results]
        if args.verbose:
            lines += [f"  {r.name}: {f}" for r in results for f in r.failures]
        out = "\n".join(lines)
    else:
        out = _dump({"max_n": args.max_n, "seed": args.seed, "passed": ok, "suites": [r.to_json() for r in results]})
    _emit(args, out)
    return 0 if ok else 1


def cmd_modular(args) -> int:
    _need(args, "shape")
    lam = args.shape
    orders = args.e or list(MODULAR_ORDERS)
    if any(e < 2 for e in orders):
        raise SystemExit("seminormal modular: --e must be at least 2")
    reports = []
    if args.tableau is not None:
        check_standard(args.tableau, lam)
        _need(args, "r")
        reports = [verify_submodule_tleq(lam, args.tableau, args.r, e) for e in orders]
    else:
        nodes = removable_nodes(lam)
        if args.node is not None:
            if args.node not in nodes:
                raise SystemExit(f"seminormal modular: {args.node} is not a removable node of {list(lam)}")
            idx = [nodes.index(args.node) + 1]
        else:
            idx = range(1, len(nodes) + 1)
        reports = [verify_submodule_fn(lam, j, e) for j in idx for e in orders]
    if args.format == "text":
        out = "\n".join(
            f"{partition_text(r.shape)} node {r.node} e={r.e}"
            + (f" r={r.r}" if r.kind == "tleq" else "")
            + f": {r.verdict}"
            for r in reports
        )
    else:
        out = _dump([r.to_json() for r in reports])
    _emit(args, out)
    return 0


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(repeats=args.repeats)
    if args.format == "csv":
        out = bench_mod.to_csv(rows)
    elif args.format == "text":
        out = "\n".join(
            f"{partition_text(r.shape)}: stepwise {r.stepwise_terms} terms {r.stepwise_ms} ms,"
            f" fast {r.fast_terms} terms {r.fast_ms} ms"
            for r in rows
        )
    else:
        out = _dump([r.to_json() for r in rows])
    _emit(args, out)
    return 0


COMMANDS = {
    "expand": cmd_expand,
    "basechange": cmd_basechange,
    "gram": cmd_gram,
    "verify": cmd_verify,
    "modular": cmd_modular,
    "bench": cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NonstandardTableauError as exc:
        print(f"seminormal {args.command}: {exc}", file=sys.stderr)
        return 2
    except DimensionLimitError as exc:
        print(f"seminormal {args.command}: {exc} (raise SEMINORMAL_MAX_DIM to override)", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"seminormal {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
