"""Command-line front end.

Subcommands: tables (mod-p census rows), bounds (certified lower bounds as
JSON), densities (closed-form local densities), survey (height census with
empirical-vs-theoretical blocks), verify (self-check suites).  Exit codes:
0 success, 1 verification/compare failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import bounds, density, ffcurve, reference_tables, survey, verify
from ._version import __version__
from .arith import primes_in
from .intervals import fraction_to_decimal


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_tables(args) -> int:
    if args.pmax < args.pmin:
        raise _Usage("--pmax must be >= --pmin")
    if args.pmin < 5:
        raise _Usage("--pmin must be >= 5")
    primes = primes_in(args.pmin, args.pmax)
    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        rows = list(pool.map(ffcurve.residue_class_counts, primes))
    rows.sort(key=lambda c: c.p)

    failures = 0
    lines = []
    json_rows = []
    header = ["p", "n_ordinary", "n_anomalous", "ordinary_density", "anomalous_density"]
    if args.compare_reference:
        header += ["ordinary_diff", "anomalous_diff"]
    lines.append(",".join(header))
    for counts in rows:
        row = {
            "p": counts.p,
            "n_ordinary": counts.ordinary,
            "n_anomalous": counts.anomalous,
            "ordinary_density": fraction_to_decimal(counts.ordinary_density),
            "anomalous_density": fraction_to_decimal(counts.anomalous_density),
        }
        if args.compare_reference:
            if counts.p in reference_tables.ORDINARY_DENSITY:
                ref_o, ref_a = reference_tables.reference_row(counts.p)
                diff_o = counts.ordinary_density - ref_o
                diff_a = counts.anomalous_density - ref_a
                tol = reference_tables.COMPARISON_TOLERANCE
                if abs(diff_o) > tol or abs(diff_a) > tol:
                    failures += 1
                row["ordinary_diff"] = f"{float(diff_o):.3e}"
                row["anomalous_diff"] = f"{float(diff_a):.3e}"
            else:
                row["ordinary_diff"] = row["anomalous_diff"] = "no-reference"
        json_rows.append(row)
        lines.append(",".join(str(row[k]) for k in header))

    if args.format == "json":
        _emit(json.dumps({"schema_version": 1, "version": __version__,
                          "rows": json_rows}, indent=2), args.out)
    else:
        _emit("\n".join(lines), args.out)
    if failures:
        print(f"{failures} row(s) off reference by more than 1e-12", file=sys.stderr)
        return 1
    return 0


def _cmd_bounds(args) -> int:
    maker = {
        "growth": bounds.selmer_growth_bound,
        "euler": bounds.euler_divisibility_bound,
        "mu-lambda": bounds.mu_lambda_bound,
    }[args.kind]
    report = maker(args.p, args.n, truncation=args.trunc, zeta_terms=args.zeta_terms)
    _emit(json.dumps(report.to_json(), indent=2), args.out)
    return 0


def _cmd_densities(args) -> int:
    if args.type == "I0":
        value = density.density_good(args.ell)
    elif args.type == "In":
        value = density.density_In(args.ell, args.n)
    elif args.type == "Igeq":
        value = density.density_In_at_least(args.ell, args.n)
    else:  # minimal
        value = density.minimal_density(args.ell)
    _emit(f"{value} = {fraction_to_decimal(value)}", args.out)
    return 0


def _cmd_survey(args) -> int:
    blocks = {
        "minimal": survey.empirical_minimal_density(args.x).to_json(),
        "selmer_growth": survey.empirical_selmer_growth(
            args.p, args.n, args.x, kodaira_only=args.kodaira_only).to_json(),
        "euler_divisibility": survey.empirical_euler_divisibility(
            args.p, args.n, args.x).to_json(),
    }
    for ell in (5, 7):
        if ell != args.p:
            blocks[f"kodaira_I1_at_{ell}"] = survey.empirical_kodaira_density(
                ell, 1, args.x).to_json()
    doc = {"schema_version": 1, "version": __version__, "x": args.x,
           "p": args.p, "n": args.n, "seed": args.seed, "blocks": blocks}
    if args.csv:
        rows = survey.write_csv(
            survey.enumerate_curves(args.x, p=args.p, classify=True), args.csv)
        doc["csv"] = {"path": args.csv, "rows": rows}
    _emit(json.dumps(doc, indent=2), args.out)
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    failures = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        if not res.passed:
            failures += 1
        detail = f"  ({res.detail})" if res.detail else ""
        print(f"{tag}  {res.name}{detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecstats",
        description="Census tables, exact densities and certified lower bounds "
                    "for elliptic curves ordered by naive height.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser("tables", help="mod-p census rows")
    tables.add_argument("--pmin", type=int, default=7)
    tables.add_argument("--pmax", type=int, default=149)
    tables.add_argument("--format", choices=("csv", "json"), default="csv")
    tables.add_argument("--compare-reference", action="store_true",
                        help="diff against the embedded reference decimals; "
                             "exit 1 on any mismatch beyond 1e-12")
    tables.add_argument("--threads", type=int, default=1)
    tables.add_argument("--out")
    tables.set_defaults(func=_cmd_tables)

    bnd = sub.add_parser("bounds", help="certified lower bound report (JSON)")
    bnd.add_argument("--p", type=int, required=True)
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--kind", choices=("growth", "euler", "mu-lambda"), default="growth")
    bnd.add_argument("--trunc", type=int, default=None)
    bnd.add_argument("--zeta-terms", type=int, default=bounds.DEFAULT_ZETA_TERMS)
    bnd.add_argument("--out")
    bnd.set_defaults(func=_cmd_bounds)

    dens = sub.add_parser("densities", help="closed-form local densities")
    dens.add_argument("--ell", type=int, required=True)
    dens.add_argument("--type", choices=("I0", "In", "Igeq", "minimal"), required=True)
    dens.add_argument("--n", type=int, default=1)
    dens.add_argument("--out")
    dens.set_defaults(func=_cmd_densities)

    srv = sub.add_parser("survey", help="height census with comparisons (JSON)")
    srv.add_argument("--x", type=int, required=True)
    srv.add_argument("--p", type=int, required=True)
    srv.add_argument("--n", type=int, default=1)
    srv.add_argument("--seed", type=int, default=0)
    srv.add_argument("--csv", help="also write per-curve rows (slow reference path)")
    srv.add_argument("--kodaira-only", action="store_true",
                     help="headline growth ratio counts Kodaira types I_{pm} "
                          "without the split condition")
    srv.add_argument("--out")
    srv.set_defaults(func=_cmd_survey)

    ver = sub.add_parser("verify", help="run self-check suites")
    ver.add_argument("--suite", choices=("all", "tables", "oracles", "bounds"),
                     default="all")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))  # exits 2
        return 2


if __name__ == "__main__":
    sys.exit(main())
