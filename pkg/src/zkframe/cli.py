"""Command line front end.

Subcommands:
    classify --k K --n N [--lattice zn|e8|e8z]   one cell or one length
    table2   [--max-k 24]                        small-length count table
    table3   [--from 25 --to 200]                length-4 counts per modulus
    oracle   --k K --n N                         exhaustive reference counts
    check    <dbfile>                            verify an exported database
    export   --k K --n N --out PATH --format zkdb|json

Global flags: --jobs J (process parallelism across cells), --budget-seconds S
(per classify call), --tier standard|extended (lengths 8 and 9 need the
extended tier).  There is no --seed; every code path is deterministic.

Exit codes: 0 success, 1 verification mismatch, 2 budget exhausted,
3 input error.
"""
from __future__ import annotations

import argparse
import sys

from .classify import (
    STANDARD_MAX_N,
    length8_type_split,
    monitor_type_conjecture,
    oracle_classify,
    run_cells,
)
from .codes import BudgetExceededError, allowed_length
from .lattices import E8, LatticeClass, lattice_classes_for_length
from .zkdb import check_db, export_db, export_json, read_db

TABLE2_COLUMNS = (
    ("Z1", 1, "zn"),
    ("Z2", 2, "zn"),
    ("Z3", 3, "zn"),
    ("Z4", 4, "zn"),
    ("Z5", 5, "zn"),
    ("Z6", 6, "zn"),
    ("Z7", 7, "zn"),
    ("Z8", 8, "zn"),
    ("E8", 8, "e8"),
    ("Z9", 9, "zn"),
    ("E8Z", 9, "e8z"),
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _cell_needs_search(k: int, n: int, tag: str) -> bool:
    """Whether a cell is decided by search rather than by a filter."""
    if not allowed_length(k, n):
        return False
    if tag == E8 and k % 2 == 1:
        return False
    return True


def _gate_tier(cells, tier: str) -> None:
    heavy = [c for c in cells if c[1] > STANDARD_MAX_N and _cell_needs_search(*c)]
    if heavy and tier != "extended":
        k, n, tag = heavy[0]
        raise _UsageError(
            f"cell k={k} n={n} lattice={tag} needs --tier extended"
        )


def _selected_cells(args) -> list[tuple[int, int, str]]:
    if args.lattice is not None:
        cls = LatticeClass(args.lattice, args.n)
        cells = [(args.k, args.n, cls.tag)]
    else:
        cells = [
            (args.k, args.n, cls.tag)
            for cls in lattice_classes_for_length(args.n)
        ]
    _gate_tier(cells, args.tier)
    return cells


def _result_line(r) -> str:
    return (
        f"k={r.k}\tn={r.n}\tlattice={r.lattice.tag}\tcount={r.count}\t"
        f"type_I={r.type_counts[0]}\ttype_II={r.type_counts[1]}\t"
        f"time={r.timing:.2f}s"
    )


def _report_length8(results) -> None:
    split = length8_type_split(results)
    for k, (n_i, n_ii) in split.items():
        print(f"# length-8 type split k={k}: Type I={n_i} Type II={n_ii}")
    for line in monitor_type_conjecture(split):
        print(f"# CONJECTURE VIOLATION: {line}")
        print(f"CONJECTURE VIOLATION: {line}", file=sys.stderr)


def _cmd_classify(args) -> int:
    cells = _selected_cells(args)
    results = run_cells(cells, jobs=args.jobs, budget_seconds=args.budget_seconds)
    for r in results:
        print(_result_line(r))
    _report_length8(results)
    return 0


def _cmd_table2(args) -> int:
    max_n = 9 if args.tier == "extended" else STANDARD_MAX_N
    cells = []
    for k in range(2, args.max_k + 1):
        for _, n, tag in TABLE2_COLUMNS:
            if n <= max_n:
                cells.append((k, n, tag))
    results = run_cells(cells, jobs=args.jobs, budget_seconds=args.budget_seconds)
    by_cell = {(r.k, r.n, r.lattice.tag): r for r in results}
    print("k\t" + "\t".join(name for name, _, _ in TABLE2_COLUMNS))
    for k in range(2, args.max_k + 1):
        row = [str(k)]
        for _, n, tag in TABLE2_COLUMNS:
            r = by_cell.get((k, n, tag))
            row.append("-" if r is None else str(r.count))
        print("\t".join(row))
    _report_length8(results)
    return 0


def _cmd_table3(args) -> int:
    if args.k_from < 2 or args.k_to < args.k_from:
        raise _UsageError("need 2 <= --from <= --to")
    cells = [(k, 4, "zn") for k in range(args.k_from, args.k_to + 1)]
    results = run_cells(cells, jobs=args.jobs, budget_seconds=args.budget_seconds)
    print("k\tN4")
    for r in results:
        print(f"{r.k}\t{r.count}")
    return 0


def _cmd_oracle(args) -> int:
    codes = oracle_classify(args.k, args.n)
    print(f"k={args.k}\tn={args.n}\tclasses={len(codes)}")
    for i, c in enumerate(codes, start=1):
        print(f"# {i}")
        for row in c.gen.entries:
            print(" ".join(str(x) for x in row))
    return 0


def _cmd_check(args) -> int:
    read_db(args.dbfile)
    problems = check_db(args.dbfile)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return 1
    print(f"ok: {args.dbfile} verified")
    return 0


def _cmd_export(args) -> int:
    cells = _selected_cells(args)
    results = run_cells(cells, jobs=args.jobs, budget_seconds=args.budget_seconds)
    if args.format == "zkdb":
        export_db(results, args.out)
    else:
        export_json(results, args.out)
    total = sum(r.count for r in results)
    print(f"wrote {total} representatives to {args.out}")
    return 0


def _add_cell_args(p, with_lattice: bool = True) -> None:
    p.add_argument("--k", type=int, required=True, help="modulus (2..1000)")
    p.add_argument("--n", type=int, required=True, help="length (1..9)")
    if with_lattice:
        p.add_argument(
            "--lattice",
            choices=["zn", "e8", "e8z"],
            default=None,
            help="restrict to one lattice class (default: all for the length)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zkframe", description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument(
        "--budget-seconds", type=float, default=None, help="budget per classify call"
    )
    parser.add_argument(
        "--tier",
        choices=["standard", "extended"],
        default="standard",
        help="standard covers lengths 1..7; extended adds 8 and 9",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one cell or one length")
    _add_cell_args(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table2", help="count table for lengths 1..9, k <= max-k")
    p.add_argument("--max-k", type=int, default=24)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("table3", help="length-4 counts per modulus")
    p.add_argument("--from", dest="k_from", type=int, default=25)
    p.add_argument("--to", dest="k_to", type=int, default=200)
    p.set_defaults(func=_cmd_table3)

    p = sub.add_parser("oracle", help="exhaustive reference classification")
    _add_cell_args(p, with_lattice=False)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("check", help="verify an exported database file")
    p.add_argument("dbfile")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("export", help="classify and write a database file")
    _add_cell_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["zkdb", "json"], default="zkdb")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"zkframe: error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"zkframe: budget exhausted: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"zkframe: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
