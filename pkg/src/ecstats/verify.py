"""Self-check suites: census reproduction, independent oracles, bound laws.

Each check returns CheckResult records instead of raising, so the CLI can
print one status line per check and exit nonzero on any failure.  The
oracles here are deliberately written against the definitions (full (x, y)
enumeration, smooth-point counting on the reduced cubic) rather than
through the library's counting paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bounds, density, ffcurve, localdata, reference_tables, survey
from .arith import primes_in
from .intervals import QInterval


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail)


# ---------------------------------------------------------------------------
# census / oracle checks


def check_reference_tables(pmin: int = 7, pmax: int = 149) -> list[CheckResult]:
    """Recompute both densities for each reference prime and compare."""
    out = []
    tol = reference_tables.COMPARISON_TOLERANCE
    for p in reference_tables.REFERENCE_PRIMES:
        if not pmin <= p <= pmax:
            continue
        counts = ffcurve.residue_class_counts(p)
        ref_ord, ref_anom = reference_tables.reference_row(p)
        d1 = abs(counts.ordinary_density - ref_ord)
        d2 = abs(counts.anomalous_density - ref_anom)
        out.append(_result(
            f"census p={p} matches reference",
            d1 <= tol and d2 <= tol,
            f"|diff| = {float(max(d1, d2)):.2e}",
        ))
    return out


def brute_force_class_counts(p: int) -> ffcurve.ClassCounts:
    """Classify all residue pairs by literal (x, y) enumeration."""
    sing = ordinary = anom = ss = 0
    squares = [pow(y, 2, p) for y in range(p)]
    for a in range(p):
        for b in range(p):
            if (4 * a * a * a + 27 * b * b) % p == 0:
                sing += 1
                continue
            n = 1
            for x in range(p):
                rhs = (x * x * x + a * x + b) % p
                n += squares.count(rhs)
            r = n % p
            if r == 0:
                anom += 1
            elif r == 1:
                ss += 1
            else:
                ordinary += 1
    return ffcurve.ClassCounts(p, ordinary, anom, ss, sing)


def check_count_oracle(primes=(5, 7, 11, 13)) -> list[CheckResult]:
    out = []
    for p in primes:
        got = ffcurve.residue_class_counts(p)
        want = brute_force_class_counts(p)
        out.append(_result(f"census p={p} equals brute force", got == want,
                           f"got {got}, want {want}" if got != want else ""))
    return out


def check_singular_counts(limit: int = 200) -> list[CheckResult]:
    """#{(a, b) mod ell : 4a^3 + 27b^2 == 0} equals ell exactly."""
    out = []
    for ell in primes_in(5, limit):
        n = sum(1 for a in range(ell) for b in range(ell)
                if ffcurve.discriminant_mod(ell, a, b) == 0)
        out.append(_result(f"singular count at {ell} equals {ell}", n == ell, f"got {n}"))
    return out


def check_partition(primes=(5, 7, 11, 13, 17, 19, 23, 29, 31, 37)) -> list[CheckResult]:
    out = []
    for p in primes:
        counts = ffcurve.residue_class_counts(p)
        out.append(_result(f"classes partition p^2 at p={p}", counts.total == p * p,
                           f"total {counts.total} vs {p * p}"))
    return out


def check_hasse(p: int = 13) -> list[CheckResult]:
    lo, hi = p + 1 - 2 * p**0.5, p + 1 + 2 * p**0.5
    bad = []
    for a in range(p):
        for b in range(p):
            cls = ffcurve.classify_residue(p, a, b)
            if cls.point_count is not None and not lo <= cls.point_count <= hi:
                bad.append((a, b, cls.point_count))
    return [_result(f"Hasse interval at p={p}", not bad, f"violations: {bad[:3]}")]


def smooth_point_count(a: int, b: int, ell: int) -> int:
    """Nonsingular F_ell-points of the reduced nodal cubic (oracle path).

    Counting every affine point normally plus the point at infinity and
    then dropping the node gives: sum_x #{y : y^2 = f(x)}, since the node
    (the unique point with y = 0 over the double root) contributes exactly
    one affine point.
    """
    counts = [0] * ell
    for y in range(ell):
        counts[y * y % ell] += 1
    return sum(counts[(x * x * x + a * x + b) % ell] for x in range(ell))


def check_split_dual_oracle(max_ell: int = 50) -> list[CheckResult]:
    """Slope-residue test vs smooth-point count, exhaustively.

    Membership of a pair mod ell^2 in the multiplicative class and both
    verdicts factor through reduction mod ell, so checking every singular
    nonzero pair mod ell covers all ell^2-lifts; the lift count is reported.
    """
    out = []
    for ell in primes_in(5, max_ell):
        classes = disagreements = 0
        for a in range(ell):
            for b in range(ell):
                if (a, b) == (0, 0) or ffcurve.discriminant_mod(ell, a, b) != 0:
                    continue
                classes += 1
                slope_split = localdata._split_from_residues(a, b, ell)
                smooth = smooth_point_count(a, b, ell)
                count_split = smooth == ell - 1
                if smooth not in (ell - 1, ell + 1) or slope_split != count_split:
                    disagreements += 1
        out.append(_result(
            f"split dual oracle at ell={ell}",
            disagreements == 0 and classes == ell - 1,
            f"{classes} classes = {classes * ell * ell} pairs mod ell^2, "
            f"{disagreements} disagreements",
        ))
    return out


# ---------------------------------------------------------------------------
# density / bound laws


def check_telescoping(ells=(5, 7, 11, 13), upto: int = 50) -> list[CheckResult]:
    out = []
    for ell in ells:
        total = sum(density.density_In(ell, n) for n in range(1, upto + 1))
        total += density.density_In_at_least(ell, upto + 1)
        out.append(_result(f"telescoping at ell={ell}",
                           total == density.density_In_at_least(ell, 1)))
    return out


def check_symmetric_conventions(p: int = 7) -> list[CheckResult]:
    e0 = bounds.prime_symmetric_sum(0, p, 100)
    em1 = bounds.prime_symmetric_sum(-1, p, 100)
    return [
        _result("symmetric sum order 0 is [1,1]", e0 == QInterval.point(1)),
        _result("symmetric sum negative order is [0,0]", em1 == QInterval.point(0)),
    ]


def check_bound_laws(grid_p=(5, 7, 11, 13), grid_n=(1, 2, 3)) -> list[CheckResult]:
    out = []
    reports = {(p, n): bounds.selmer_growth_bound(p, n) for p in grid_p for n in grid_n}
    out.append(_result(
        "growth bound positive on grid",
        all(r.value.lo > 0 for r in reports.values()),
    ))
    out.append(_result(
        "growth bound decreasing in n",
        all(reports[(p, n + 1)].value.lo < reports[(p, n)].value.lo
            for p in grid_p for n in grid_n[:-1]),
    ))
    out.append(_result(
        "mu+lambda bound equals growth bound",
        all(bounds.mu_lambda_bound(p, n).value == reports[(p, n)].value
            for p in grid_p for n in grid_n),
    ))
    p, n = 7, 1
    base = bounds.default_truncation(p)
    ladder = [bounds.selmer_growth_bound(p, n, truncation=base * 2**i) for i in range(4)]
    out.append(_result(
        "lower endpoint nondecreasing under truncation doubling",
        all(ladder[i].value.lo <= ladder[i + 1].value.lo for i in range(3)),
    ))
    out.append(_result(
        "intervals nest under refinement",
        all(ladder[i].value.encloses(ladder[i + 1].value) for i in range(3)),
    ))
    fam = bounds.growth_family_density((5,), 1, 7, truncation=200)
    out.append(_result(
        "family density exceeds its stated bound",
        fam.exact.lo > fam.stated_bound.hi,
        f"exact.lo = {float(fam.exact.lo):.6e}, bound.hi = {float(fam.stated_bound.hi):.6e}",
    ))
    euler1 = bounds.euler_divisibility_bound(7, 1)
    out.append(_result(
        "euler bound at n=1 has vanishing auxiliary term",
        euler1.terms.sym_aux == QInterval.point(0),
    ))
    return out


def check_montecarlo(samples: int = 20000, seed: int = 20260809) -> list[CheckResult]:
    preds = [
        ("box ell=5 v=(1,1)", 5, survey.valuation_box_predicate(5, 1, 1)),
        ("box ell=7 v=(1,2)", 7, survey.valuation_box_predicate(7, 1, 2)),
        ("I_1 at ell=5", 5, survey.kodaira_In_predicate(5, 1)),
        ("I_1 at ell=7", 7, survey.kodaira_In_predicate(7, 1)),
    ]
    out = []
    for i, (label, ell, pred) in enumerate(preds):
        res = survey.montecarlo_local_measure(ell, pred.exponent, pred, samples, seed + i)
        mu = pred.exact_measure
        sigma = (float(mu) * (1 - float(mu)) / samples) ** 0.5
        dev = abs(float(res.estimate) - float(mu))
        out.append(_result(f"monte carlo {label} within 5 sigma", dev <= 5 * sigma,
                           f"dev = {dev:.2e}, sigma = {sigma:.2e}"))
    return out


SUITES = {
    "tables": (check_reference_tables,),
    "oracles": (check_count_oracle, check_singular_counts, check_partition,
                check_hasse, check_split_dual_oracle, check_montecarlo),
    "bounds": (check_telescoping, check_symmetric_conventions, check_bound_laws),
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        checks = [fn for suite in SUITES.values() for fn in suite]
    else:
        checks = SUITES[name]
    results = []
    for fn in checks:
        results.extend(fn())
    return results
