"""Command-line interface.

Exit codes: 0 success, 1 usage/parse/invalid input, 2 verification failure,
3 search bound exceeded (result ``unknown``).
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import kernels
from .algebra import add, product
from .core import FunctionalDigraph, canonical_digraph, canonical_form, is_isomorphic, to_dot
from .division import DEFAULT_BOUND, Tri, factorization, quotients
from .enumeration import EnumFilter, all_digraphs
from .errors import FunDigraphError, WitnessInvalidError
from .expr import eval_text
from .lemmas import run_suites
from .witness import F1Construction, WitnessReport, build_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_UNKNOWN = 3


def _canon(X: FunctionalDigraph) -> str:
    return canonical_digraph(X).literal()


def cmd_canon(args: argparse.Namespace) -> int:
    X = eval_text(args.expr)
    if args.code:
        print("".join(map(str, canonical_form(X).code)))
    else:
        print(_canon(X))
    return EXIT_OK


def cmd_eq(args: argparse.Namespace) -> int:
    print("true" if is_isomorphic(eval_text(args.left), eval_text(args.right)) else "false")
    return EXIT_OK


def cmd_binop(args: argparse.Namespace) -> int:
    op = product if args.command == "prod" else add
    print(_canon(op(eval_text(args.left), eval_text(args.right))))
    return EXIT_OK


def cmd_divides(args: argparse.Namespace) -> int:
    X, A = eval_text(args.divisor), eval_text(args.dividend)
    qs = quotients(X, A, args.bound)
    if qs.quotients:
        print(f"yes  quotient {_canon(qs.quotients[0])}")
        return EXIT_OK
    if qs.exhaustive:
        print("no")
        return EXIT_OK
    print(f"unknown  quotient size {A.n // X.n} exceeds bound {args.bound}")
    return EXIT_UNKNOWN


def cmd_quotients(args: argparse.Namespace) -> int:
    X, A = eval_text(args.divisor), eval_text(args.dividend)
    qs = quotients(X, A, args.bound)
    for Y in qs.quotients:
        print(_canon(Y))
    if not qs.exhaustive:
        print(f"unknown: quotient size {A.n // X.n} exceeds bound {args.bound}", file=sys.stderr)
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_irreducible(args: argparse.Namespace) -> int:
    res, pair = factorization(eval_text(args.expr), args.bound)
    if pair is not None:
        print(f"no  {_canon(pair[0])} * {_canon(pair[1])}")
    else:
        print(str(res))
    return EXIT_UNKNOWN if res == Tri.UNKNOWN else EXIT_OK


def _text_report(r: WitnessReport) -> str:
    lines = [
        f"branch    {r.branch}",
        f"X         {r.X.literal()}",
        f"A         {r.A.literal()}",
        f"B         {r.B.literal()}",
        f"Y         {r.Y.literal()}",
        f"sizes     |X|={r.X.n} |A|={r.A.n} |B|={r.B.n} |Y|={r.Y.n} |XY|=|AB|={r.X.n * r.Y.n}",
    ]
    for key in sorted(r.parameters):
        if key != "levels":
            lines.append(f"{key:<9} {r.parameters[key]}")
    lines.append(f"X !| A    {r.not_div_A.kind} {r.not_div_A.data}")
    lines.append(f"X !| B    {r.not_div_B.kind} {r.not_div_B.data}")
    lines.append(f"iso       {'explicit phi' if r.iso is not None else 'canonical equality'}")
    lines.append(f"verified  {str(r.verified).lower()}")
    return "\n".join(lines)


def _write_dots(r: WitnessReport, outdir: str) -> None:
    os.makedirs(outdir, exist_ok=True)
    labels = {}
    if r.branch == "F1":
        con = F1Construction(r.X)
        labels["B"] = ["".join(map(str, con.decode(j))) for j in range(con.size_B)]
    for name in ("X", "A", "B", "Y"):
        G = getattr(r, name)
        with open(os.path.join(outdir, f"{name}.dot"), "w") as fh:
            fh.write(to_dot(G, name, labels.get(name)))


def cmd_witness(args: argparse.Namespace) -> int:
    X = eval_text(args.expr)
    report = build_witness(X, args.bound)
    print(_text_report(report))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    if args.dot:
        _write_dots(report, args.dot)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    f = EnumFilter(args.n, args.connected, args.cycle_len)
    for X in all_digraphs(f, strategy=args.strategy):
        print(X.literal())
    return EXIT_OK


def cmd_check_lemmas(args: argparse.Namespace) -> int:
    results = run_suites(args.max_size)
    for r in results:
        print(r.line(), flush=True)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed  (backend: {kernels.BACKEND})")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fundigraph", description="Algebra of functional digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("canon", help="canonical representative of an expression")
    s.add_argument("expr")
    s.add_argument("--code", action="store_true", help="print the canonical code instead")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("eq", help="isomorphism test")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_eq)

    for name in ("prod", "sum"):
        s = sub.add_parser(name, help=f"{'direct product' if name == 'prod' else 'disjoint union'} of two expressions")
        s.add_argument("left")
        s.add_argument("right")
        s.set_defaults(func=cmd_binop)

    for name, fn in (("divides", cmd_divides), ("quotients", cmd_quotients)):
        s = sub.add_parser(name, help="does the first expression divide the second" if name == "divides" else "all quotients A / X")
        s.add_argument("divisor")
        s.add_argument("dividend")
        s.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest quotient size searched")
        s.set_defaults(func=fn)

    s = sub.add_parser("irreducible", help="bounded irreducibility test")
    s.add_argument("expr")
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    s.set_defaults(func=cmd_irreducible)

    s = sub.add_parser("witness", help="non-primality witness (A, B, Y)")
    s.add_argument("expr")
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest quotient size for exhaustive evidence")
    s.add_argument("--json", metavar="PATH", help="write the JSON report here")
    s.add_argument("--dot", metavar="DIR", help="write X.dot, A.dot, B.dot, Y.dot here")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("enumerate", help="one canonical literal per isomorphism class")
    s.add_argument("n", type=int)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--cycle-len", type=int, default=None)
    s.add_argument("--strategy", choices=("constructive", "brute-force"), default="constructive")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check-lemmas", help="run every property suite")
    s.add_argument("--max-size", type=int, default=4)
    s.set_defaults(func=cmd_check_lemmas)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except WitnessInvalidError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FunDigraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
