"""Command-line front end.

Three subcommands: ``betti`` prints a Betti table (JSON, CSV, or a
Macaulay-style diagram), ``homology`` prints homology of run complements
or of the full cycle complement, and ``verify`` runs the cross-check
matrix between the closed forms and the brute-force enumeration.

Exit codes are stable API: 0 success, 1 verification failure, 2 usage
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .betti import (
    BettiTable,
    OracleCapError,
    betti_closed_cycle,
    betti_closed_line,
    betti_hochster,
    homology_cycle_complement,
    homology_run_sequence,
    nonzero_criterion,
    pd_reg,
)
from .complexes import complement
from .homology import FieldSpec, QQ, reduced_homology_dims
from .paths import PathFamilySpec, RunSequence, build_path_complex, build_run_complement

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathbetti",
        description="Exact Betti tables, homology, pd and regularity of path ideals of cycles and lines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    betti = sub.add_parser("betti", help="compute a Betti table")
    betti.add_argument("--kind", choices=("cycle", "line"), required=True)
    betti.add_argument("--n", type=int, required=True, help="number of vertices")
    betti.add_argument("--t", type=int, required=True, help="path length parameter")
    betti.add_argument("--method", choices=("oracle", "closed", "both"), default="both")
    betti.add_argument("--char", type=int, default=0, help="field characteristic for the oracle (0 or a prime)")
    betti.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    hom = sub.add_parser("homology", help="homology of run complements or the full cycle complement")
    hom.add_argument("--runs", help="comma-separated run lengths, e.g. 4,2,1")
    hom.add_argument("--kind", choices=("cycle",), help="full-complement mode")
    hom.add_argument("--n", type=int)
    hom.add_argument("--t", type=int, required=True)
    hom.add_argument("--explicit", action="store_true", help="also compute boundary-matrix homology and compare")
    hom.add_argument("--char", type=int, default=0)

    verify = sub.add_parser("verify", help="run the oracle/closed-form cross-check matrix")
    verify.add_argument("--max-n", type=int, default=10)
    verify.add_argument("--t-range", default="2..5", help="inclusive range a..b of t values")
    verify.add_argument("--char-list", default="0", help="comma-separated characteristics, e.g. 0,2,32003")
    return parser


def _table_record(table: BettiTable) -> list[dict]:
    return [
        {"i": i, "j": j, "value": value, "method": method}
        for i, j, value, method in table.items()
    ]


def _render_diagram(table: BettiTable) -> str:
    """Macaulay-style Betti diagram: rows are j - i, columns are i."""
    pd = table.pd
    reg = table.reg
    cells = []
    for r in range(reg + 1):
        row = []
        for i in range(pd + 1):
            value = 1 if (i == 0 and r == 0) else table.value(i, i + r)
            row.append(str(value) if value else ".")
        cells.append(row)
    totals = []
    for i in range(pd + 1):
        col = sum(int(cells[r][i]) for r in range(reg + 1) if cells[r][i] != ".")
        totals.append(str(col))
    width = max(2, *(len(s) for row in cells for s in row), *(len(s) for s in totals))
    head = " " * 7 + " ".join(str(i).rjust(width) for i in range(pd + 1))
    total = "total: " + " ".join(s.rjust(width) for s in totals)
    body = [
        f"{r:>5}: " + " ".join(s.rjust(width) for s in cells[r])
        for r in range(reg + 1)
    ]
    return "\n".join([head, total, *body])


def cmd_betti(args: argparse.Namespace) -> int:
    try:
        spec = PathFamilySpec(args.kind, args.n, args.t)
        field = FieldSpec(args.char)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    start = time.perf_counter()
    closed = oracle = None
    if args.method in ("closed", "both"):
        closed = betti_closed_cycle(spec) if spec.kind == "cycle" else betti_closed_line(spec)
    if args.method in ("oracle", "both"):
        try:
            oracle = betti_hochster(build_path_complex(spec), field)
        except OracleCapError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    timing_ms = (time.perf_counter() - start) * 1000.0

    table = closed if closed is not None else oracle
    record = {
        "kind": spec.kind,
        "n": spec.n,
        "t": spec.t,
        "p": spec.p,
        "d": spec.d,
        "method": args.method,
        "field_characteristic": field.characteristic,
        "entries": _table_record(table),
        "pd": table.pd,
        "reg": table.reg,
        "timing_ms": round(timing_ms, 3),
    }
    mismatch = False
    if args.method == "both":
        diff = closed.diff(oracle)
        record["diff"] = [
            {"i": i, "j": j, "closed": a, "oracle": b}
            for (i, j), (a, b) in diff.items()
        ]
        mismatch = bool(diff)

    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        print("kind,n,t,i,j,beta,method")
        for i, j, value, method in table.items():
            print(f"{spec.kind},{spec.n},{spec.t},{i},{j},{value},{method}")
    else:
        print(_render_diagram(table))
        print(f"pd = {table.pd}, reg = {table.reg}  ({spec.kind}, n={spec.n}, t={spec.t})")
        if args.method == "both":
            print("oracle and closed form " + ("DISAGREE" if mismatch else "agree"))
    return EXIT_VERIFY if mismatch else EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    if (args.runs is None) == (args.kind is None):
        print("error: give exactly one of --runs or --kind cycle", file=sys.stderr)
        return EXIT_USAGE
    try:
        field = FieldSpec(args.char)
        if args.runs is not None:
            seq = RunSequence(tuple(int(s) for s in args.runs.split(",")))
            summary = homology_run_sequence(args.t, seq)
            record: dict = {"runs": list(seq.lengths), "t": args.t}
            explicit_complex = build_run_complement(seq, args.t) if args.explicit else None
        else:
            if args.n is None:
                print("error: --kind cycle needs --n", file=sys.stderr)
                return EXIT_USAGE
            spec = PathFamilySpec("cycle", args.n, args.t)
            summary = homology_cycle_complement(spec)
            record = {"kind": "cycle", "n": spec.n, "t": spec.t}
            if args.explicit:
                delta = build_path_complex(spec)
                explicit_complex = complement(delta, delta.ambient)
            else:
                explicit_complex = None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    record["closed_form"] = {
        "degree": summary.nonzero_degree,
        "dimension": summary.dimension,
    }
    exit_code = EXIT_OK
    if explicit_complex is not None:
        vector = reduced_homology_dims(explicit_complex, field)
        record["explicit"] = [[degree, dim] for degree, dim in sorted(vector.items())]
        record["match"] = vector == summary.as_vector()
        if not record["match"]:
            exit_code = EXIT_VERIFY
    print(json.dumps(record, indent=2))
    return exit_code


def run_verification(max_n: int, t_lo: int, t_hi: int, characteristics: Sequence[int]) -> tuple[list[str], int]:
    """Cross-check matrix; returns (report lines, number of failures)."""
    lines: list[str] = []
    failures = 0
    fields = [FieldSpec(c) for c in characteristics]

    def check(ok: bool, label: str, detail: str = "") -> None:
        nonlocal failures
        if ok:
            lines.append(f"PASS {label}")
        else:
            failures += 1
            lines.append(f"FAIL {label}{': ' + detail if detail else ''}")

    cells = [
        (n, t)
        for n in range(3, max_n + 1)
        for t in range(max(2, t_lo), min(t_hi, n) + 1)
    ]
    if not cells:
        lines.append("warning: empty verification range, nothing to do")
        return lines, 0

    for n, t in cells:
        spec = PathFamilySpec("cycle", n, t)
        delta = build_path_complex(spec)
        expected = homology_cycle_complement(spec).as_vector()
        for field in fields:
            got = reduced_homology_dims(complement(delta, delta.ambient), field)
            check(
                got == expected,
                f"n={n} t={t} char={field.characteristic} cycle-complement-homology",
                f"explicit={got} closed={expected}",
            )
        if t >= n:
            continue
        closed = betti_closed_cycle(spec)
        reference: BettiTable | None = None
        for field in fields:
            oracle = betti_hochster(delta, field)
            diff = closed.diff(oracle)
            bad = next(iter(diff)) if diff else None
            check(
                not diff,
                f"n={n} t={t} char={field.characteristic} cycle-closed-vs-oracle",
                f"first mismatch at (i,j)={bad}: closed={diff[bad][0]} oracle={diff[bad][1]}" if bad else "",
            )
            if reference is None:
                reference = oracle
            else:
                delta_diff = reference.diff(oracle)
                check(
                    not delta_diff,
                    f"n={n} t={t} char={field.characteristic} oracle-field-independence",
                    f"differs from char={fields[0].characteristic} at {sorted(delta_diff)}",
                )
        assert reference is not None
        violations = [
            (i, j) for (i, j) in reference.entries
            if j > i * t or (j < n and not nonzero_criterion(spec, i, j))
        ]
        check(
            not violations,
            f"n={n} t={t} vanishing-soundness",
            f"entries {violations} violate the criterion",
        )
        check(
            pd_reg(spec) == (reference.pd, reference.reg),
            f"n={n} t={t} pd-reg",
            f"formula={pd_reg(spec)} oracle={(reference.pd, reference.reg)}",
        )
        line_spec = PathFamilySpec("line", n, t)
        line_oracle = betti_hochster(build_path_complex(line_spec), fields[0])
        line_closed = betti_closed_line(line_spec)
        diff = line_closed.diff(line_oracle)
        bad = next(iter(diff)) if diff else None
        check(
            not diff,
            f"n={n} t={t} line-closed-vs-oracle",
            f"first mismatch at (i,j)={bad}: closed={diff[bad][0]} oracle={diff[bad][1]}" if bad else "",
        )
    return lines, failures


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        lo, _, hi = args.t_range.partition("..")
        t_lo, t_hi = int(lo), int(hi if hi else lo)
        characteristics = [int(c) for c in args.char_list.split(",") if c != ""]
        for c in characteristics:
            FieldSpec(c)
        if not characteristics:
            raise ValueError("empty characteristic list")
    except ValueError as exc:
        print(f"error: invalid verify arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        lines, failures = run_verification(args.max_n, t_lo, t_hi, characteristics)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    for line in lines:
        print(line)
    checked = sum(1 for line in lines if not line.startswith("warning"))
    print(f"{checked} checks, {failures} failures")
    return EXIT_VERIFY if failures else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "betti":
        return cmd_betti(args)
    if args.command == "homology":
        return cmd_homology(args)
    return cmd_verify(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
