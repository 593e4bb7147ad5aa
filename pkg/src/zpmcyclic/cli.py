"""Command-line front end.

Usage:
    zpmcyclic factor --p 2 --m 3 --n 7 --modulus shifted
    zpmcyclic counts --p 2 --m 3 --n 31
    zpmcyclic table --p 2 --m 3 --n-max 99 --diff-paper
    zpmcyclic enumerate --p 2 --m 3 --n 7 --filter so
    zpmcyclic code --p 2 --m 2 --n 7 --profile 1,0,2
    zpmcyclic verify --p 2 --m 3 --n 7

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import codes, oracle
from .errors import BudgetExceeded, ZpmError
from .factorization import ModulusKind, hensel_lift
from .published import Z8_COLUMNS, Z8_TABLE
from .ring_poly import RingParams, to_text

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
TABLE_COLUMNS = ("n", "gamma", "delta", "N_t", "N_n", "N_sd_formula", "N_sd_actual")
BUDGET_ENV = "ZPMCYCLIC_BUDGET"


def _budgets() -> tuple[int, int]:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return oracle.DEFAULT_PROFILE_BUDGET, oracle.DEFAULT_CODEWORD_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ZpmError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return value, value


def _dump(doc) -> str:
    return json.dumps(doc, ensure_ascii=False)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_factor(args) -> int:
    basis = hensel_lift(args.p, args.m, args.n, args.modulus)
    if args.format == "json":
        print(_dump(basis.to_json()))
        return EXIT_OK
    parts = [to_text(f) for f in basis.factors]
    print("; ".join(parts + [f"gamma={basis.gamma} delta={basis.delta}"]))
    print("pairing=" + ",".join(map(str, basis.pairing)))
    return EXIT_OK


def table_row(p: int, m: int, n: int) -> tuple[int, ...]:
    return codes.code_counts(p, m, n).row()


def _row_doc(row) -> dict:
    return dict(zip(TABLE_COLUMNS, row))


def cmd_counts(args) -> int:
    row = table_row(args.p, args.m, args.n)
    if args.format == "json":
        print(_dump(_row_doc(row)))
    else:
        sys.stdout.write(_csv([row], TABLE_COLUMNS))
    return EXIT_OK


def paper_diff(row) -> list[str]:
    """Names of published columns that disagree with a recomputed Z_8 row."""
    n, gamma, delta, n_t, n_n, sd_formula, _ = row
    published = Z8_TABLE.get(n)
    if published is None:
        return []
    ours = (gamma, delta, n_t, n_n, sd_formula)
    return [name for name, a, b in zip(Z8_COLUMNS, ours, published) if a != b]


def table_lengths(p: int, n_max: int) -> list[int]:
    return [n for n in range(1, n_max + 1, 2) if math.gcd(n, p) == 1]


def compute_table(p: int, m: int, n_max: int, jobs: int = 1) -> list[tuple[int, ...]]:
    RingParams(p, m)
    ns = table_lengths(p, n_max)
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(table_row, itertools.repeat(p), itertools.repeat(m), ns))
    return [table_row(p, m, n) for n in ns]


def cmd_table(args) -> int:
    if args.diff_paper and (args.p, args.m) != (2, 3):
        raise ZpmError("--diff-paper compares against the published Z_8 table; use --p 2 --m 3")
    if args.jobs < 1:
        raise ZpmError("--jobs must be positive")
    rows = compute_table(args.p, args.m, args.n_max, args.jobs)
    if args.format == "json":
        docs = []
        for row in rows:
            doc = _row_doc(row)
            if args.diff_paper:
                doc["paper_diff"] = paper_diff(row)
            docs.append(doc)
        print(_dump(docs))
        return EXIT_OK
    if not rows:
        return EXIT_OK
    if args.diff_paper:
        out = [row + (";".join(paper_diff(row)),) for row in rows]
        sys.stdout.write(_csv(out, TABLE_COLUMNS + ("paper_diff",)))
    else:
        sys.stdout.write(_csv(rows, TABLE_COLUMNS))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    profile_budget, _ = _budgets()
    basis = hensel_lift(args.p, args.m, args.n, ModulusKind.SHIFTED)
    form = codes.GeneratorForm.REDUCED if args.reduced else codes.GeneratorForm.PAPER_NORMAL
    stream = codes.enumerate_profiles(basis, args.filter, profile_budget)
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    lines, docs = [], []
    for profile in stream:
        g = codes.generator_polynomial(profile, form)
        if args.format == "json":
            docs.append({**profile.to_json(), "generator": g.to_json(), "generator_text": to_text(g)})
        else:
            lines.append(f"{profile} {to_text(g)}")
    if args.format == "json":
        print(_dump(docs))
    elif lines:
        print("\n".join(lines))
    return EXIT_OK


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ZpmError(f"profile must be comma-separated integers, got {text!r}") from None


def cmd_code(args) -> int:
    _, codeword_budget = _budgets()
    profile = codes.make_profile(args.p, args.m, args.n, _parse_profile(args.profile))
    form = codes.GeneratorForm.REDUCED if args.reduced else codes.GeneratorForm.PAPER_NORMAL
    g = codes.generator_polynomial(profile, form)
    doc = {
        **profile.to_json(),
        "generator": to_text(g),
        "cardinality": codes.cardinality(profile),
        "dual": list(codes.dual_profile(profile).exponents),
        "classification": codes.classify_triviality(profile).value,
        "self_dual": codes.is_self_dual(profile),
    }
    if doc["self_dual"] and args.type:
        doc["type"] = codes.classify_type(profile, codeword_budget).value
    if args.format == "json":
        print(_dump(doc))
    else:
        for key in ("exponents", "generator", "cardinality", "dual", "classification", "self_dual", "type"):
            if key in doc:
                print(f"{key}: {doc[key]}")
    return EXIT_OK


def cmd_verify(args) -> int:
    profile_budget, _ = _budgets()
    report = oracle.crosscheck(args.p, args.m, args.n, profile_budget)
    if report.passed:
        counts = " ".join(f"{k}={v}" for k, v in report.counts.items())
        print(f"ok p={args.p} m={args.m} n={args.n} profiles={report.profiles} {counts}")
        return EXIT_OK
    doc = report.to_json()
    doc["first_failure"] = report.first_failure().to_json()
    print(_dump(doc))
    return EXIT_VERIFY


def _ring_args(sp, with_n=True):
    sp.add_argument("--p", type=int, required=True, help="prime p")
    sp.add_argument("--m", type=int, required=True, help="chain length m (ring Z_{p^m})")
    if with_n:
        sp.add_argument("--n", type=int, required=True, help="odd code length coprime to p")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpmcyclic", description="Cyclic self-orthogonal codes over Z_{p^m}.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="basic irreducible factorization of the modulus")
    _ring_args(sp)
    sp.add_argument("--modulus", choices=[k.value for k in ModulusKind], default=ModulusKind.SHIFTED.value)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("counts", help="closed-form code counts for one length")
    _ring_args(sp)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("table", help="counts for every odd length up to --n-max")
    _ring_args(sp, with_n=False)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--diff-paper", action="store_true", help="flag disagreements with the published Z_8 table")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate", help="list codes and their generator polynomials")
    _ring_args(sp)
    sp.add_argument("--filter", choices=[f.value for f in codes.ProfileFilter], default="all")
    sp.add_argument("--reduced", action="store_true", help="reduce generators modulo x^n - 1")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("code", help="describe one code given by its exponent profile")
    _ring_args(sp)
    sp.add_argument("--profile", required=True, help="comma-separated exponents, canonical factor order")
    sp.add_argument("--reduced", action="store_true")
    sp.add_argument("--type", action="store_true", help="classify Type I/II by exhaustive scan if self-dual")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("verify", help="brute-force crosscheck of every profile")
    _ring_args(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ZpmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
