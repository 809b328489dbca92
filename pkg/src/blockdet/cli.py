"""Command-line interface.

Exit codes are a stable contract: 0 for success or a verified equality,
1 for a verified inequality or falsification, 2 for usage/input errors.
Identical flags and seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from .conditions import family_condition, format_condition
from .matrix import (
    MatrixFormatError,
    det_commutative,
    format_block_matrix,
    format_matrix,
    parse_block_matrix,
    parse_matrix,
)
from .ncdet import nc_row_det
from .ring import parse_ring
from .traces import (
    check_colswap_identity,
    check_rowswap_identity,
    check_transpose_identity,
    symbolic_row_det,
    CommRel,
)
from .verify import (
    BUILTIN_NAMES,
    builtin_matrix,
    check_identity,
    classify_size2,
    optimality_scan,
    run_campaign,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_block_matrix(args):
    if args.builtin:
        return builtin_matrix(args.builtin, n=args.n)
    if not args.file:
        raise MatrixFormatError("either a file or --builtin is required")
    return parse_block_matrix(_read_text(args.file))


def _cmd_det(args) -> int:
    mat = parse_matrix(_read_text(args.file))
    print(f"det={det_commutative(mat)}")
    return 0


def _cmd_ncdet(args) -> int:
    bm = _load_block_matrix(args)
    result = nc_row_det(bm)
    sys.stdout.write(format_matrix(result))
    return 0


def _cmd_check(args) -> int:
    bm = _load_block_matrix(args)
    result = check_identity(bm)
    verdict = "EQUAL" if result.equal else "UNEQUAL"
    print(f"lhs={result.lhs} rhs={result.rhs} {verdict}")
    return 0 if result.equal else 1


def _cmd_family(args) -> int:
    cond = family_condition(args.name, args.n)
    sys.stdout.write(format_condition(cond))
    return 0


def _cmd_campaign(args) -> int:
    cond = family_condition(args.family, args.n)
    ring = parse_ring(args.ring)
    report = run_campaign(cond, args.m, ring, args.trials, args.seed, condition_id=args.family)
    if report.first_failure is not None:
        f = report.first_failure
        print(f"failure trial={f.trial} lhs={f.lhs} rhs={f.rhs}")
    print(report.summary_line() + f" generator={report.generator}")
    return 0 if report.failures == 0 else 1


def _cmd_classify2(args) -> int:
    for line in classify_size2().lines():
        print(line)
    return 0


def _cmd_counterexample(args) -> int:
    bm = builtin_matrix(args.name, n=args.n)
    sys.stdout.write(format_block_matrix(bm))
    result = check_identity(bm)
    verdict = "EQUAL" if result.equal else "UNEQUAL"
    print(f"lhs={result.lhs} rhs={result.rhs} {verdict}")
    return 0


def _parse_missing(text: str):
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("--missing expects four integers r1,c1,r2,c2")
    return ((parts[0], parts[1]), (parts[2], parts[3]))


def _cmd_symbolic(args) -> int:
    n = args.n
    if args.check == "colswap":
        if args.k is None:
            raise ValueError("--k is required for colswap")
        ok = check_colswap_identity(n, args.k)
    elif args.check == "transpose":
        if args.c is None:
            raise ValueError("--c is required for transpose")
        ok = check_transpose_identity(n, args.c)
    else:
        if args.i is None or args.j is None:
            raise ValueError("--i and --j are required for rowswap")
        missing = _parse_missing(args.missing) if args.missing else None
        ok = check_rowswap_identity(n, args.i, args.j, missing)
    terms = symbolic_row_det(n, CommRel.empty(n)).term_count
    print(f"check={args.check} n={n} terms={terms} {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_optimality(args) -> int:
    report = optimality_scan(args.n, campaign_trials=args.trials, seed=args.seed)
    for rec in report.edge_cases:
        print(rec.line())
    for camp in report.campaigns:
        print(camp.summary_line())
    print(f"optimality n={args.n} {'OK' if report.all_ok else 'FAIL'}")
    return 0 if report.all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockdet",
        description="Exact determinants of block matrices with partially commuting blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="determinant of a matrix file")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.set_defaults(fn=_cmd_det)

    p = sub.add_parser("ncdet", help="row-ordered block determinant of a block matrix")
    p.add_argument("file", nargs="?", help="block matrix file, or - for stdin")
    p.add_argument("--builtin", choices=BUILTIN_NAMES, help="use a built-in matrix")
    p.add_argument("--n", type=int, default=None, help="size for parametric built-ins")
    p.set_defaults(fn=_cmd_ncdet)

    p = sub.add_parser("check", help="compare det(Det M) with det M")
    p.add_argument("file", nargs="?", help="block matrix file, or - for stdin")
    p.add_argument("--builtin", choices=BUILTIN_NAMES, help="use a built-in matrix")
    p.add_argument("--n", type=int, default=None, help="size for parametric built-ins")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("family", help="print a named condition family at size n")
    p.add_argument("--name", required=True, help="family id, e.g. f, kappa, side:2, g5")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("campaign", help="randomized identity-check campaign")
    p.add_argument("--family", required=True, help="family id")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="block size")
    p.add_argument("--ring", default="mod:10007", help="int, mod:p or poly:v")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_campaign)

    p = sub.add_parser("classify2", help="classify all 64 size-2 conditions")
    p.set_defaults(fn=_cmd_classify2)

    p = sub.add_parser("counterexample", help="print a built-in matrix and its determinant pair")
    p.add_argument("--name", required=True, choices=BUILTIN_NAMES)
    p.add_argument("--n", type=int, default=None, help="size for parametric built-ins")
    p.set_defaults(fn=_cmd_counterexample)

    p = sub.add_parser("symbolic", help="symbolic ordering-identity checks")
    p.add_argument("--check", required=True, choices=("colswap", "transpose", "rowswap"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="column for colswap")
    p.add_argument("--c", type=int, help="column for transpose")
    p.add_argument("--i", type=int, help="first row for rowswap")
    p.add_argument("--j", type=int, help="second row for rowswap")
    p.add_argument("--missing", help="withheld pair r1,c1,r2,c2 for rowswap")
    p.set_defaults(fn=_cmd_symbolic)

    p = sub.add_parser("optimality", help="minimality scan of the row-one-free family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=60)
    p.add_argument("--seed", type=int, default=20161004)
    p.set_defaults(fn=_cmd_optimality)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except (MatrixFormatError,) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
