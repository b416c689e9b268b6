"""Verification suites.

Each suite sweeps a bounded parameter grid, compares a closed form or
q-polynomial against enumeration (or against the other side of an identity),
and returns a `VerificationReport` with one record per comparison.

| Suite             | Compares                                                         |
|-------------------|------------------------------------------------------------------|
| csp               | root-of-unity values of the five sieving polynomials and X(q)    |
|                   | against fixed points of annular rotations; fixed-count formula   |
| unequal-orders    | fixed points of rotations whose two components differ in order   |
| sum-chain         | Kre -> Nara1 -> Nara2 -> Nara3 -> Cat as polynomial identities   |
| lemmas            | the three summation lemmas, q-Vandermonde, root-of-unity values  |
| polynomiality     | quotients with nonnegative integer coefficients                  |
| disc              | disc counts, disc q-sums and the disc rotation sieving           |
| counts            | plain counts, type-B counts and matchings against enumeration    |
| bijection         | injectivity and cardinality of the rotation-invariance bijection |

Sweeps are split into tasks, one per (n, m) or per outer parameter, and run
with joblib. Task results are concatenated in sweep order, so reports do not
depend on the number of workers.

Example:
    ```python
    from anc_sieve.verify import verify_csp_annular

    report = verify_csp_annular(max_total=6)
    report.ok          # True
    ```
"""
import math
import sys
import time
from collections import Counter
from typing import Any, Callable, Iterator, Optional

from joblib import Parallel, delayed
from tqdm import tqdm

from .annulus import (
    all_rotation_pairs,
    apply_rotation,
    bijection_codomain_size,
    bijection_phi,
    catalog_with_profiles,
    connected_pair_count,
    disc_cycle_type,
    enumerate_anc_B,
    enumerate_matchings,
    enumerate_nc_disc,
    in_bijection_codomain,
    profile_of,
    rigid_rotation,
    rotate_disc,
    rotations_of_order,
)
from .config import AncConfig, VerifyConfig, get_config, set_config
from .errors import AncSieveError
from .formulas import (
    annular_catalan_q,
    annular_kreweras_q,
    annular_kreweras_q_factored,
    annular_narayana1_q,
    annular_narayana2_q,
    annular_narayana3_q,
    bessis_reiner_X,
    binom,
    catalan,
    catalan_q,
    count_anc,
    count_anc_B,
    count_anc_profile,
    fixed_count_formula,
    iter_profiles,
    iter_profiles_at,
    kreweras,
    kreweras_q,
    matching_count,
    matching_profile,
    matching_total,
    narayana,
    narayana_q,
    rotation_csp_q,
    shifted_q_binomial,
    sum1_at_one,
)
from .logger import AncLogger
from .models import CycleProfile, ProfileFilter
from .partitions import divide, partitions_of, par_set, tau
from .qcalc import (
    ZERO,
    QPolynomial,
    cyclotomic_as_integer,
    eval_at_primitive_root,
    exact_div,
    poly_divmod,
    primitive_exponents,
    q_binomial,
    q_int,
    q_multinomial_partition,
)
from .report import CheckRecord, CheckStatus, VerificationReport

Task = tuple[Callable[..., None], tuple]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def annulus_sizes(max_total: int) -> Iterator[tuple[int, int]]:
    """(n, m) with n, m >= 1 and n + m <= max_total, smallest total first."""
    for total in range(2, max_total + 1):
        for n in range(1, total):
            yield n, total - n


def _run_task(config: AncConfig, suite: str, fn: Callable[..., None], args: tuple) -> list[CheckRecord]:
    set_config(config)
    report = VerificationReport(suite=suite)
    try:
        fn(report, *args)
    except AncSieveError as e:
        report.record(
            "error",
            {"task": fn.__name__.lstrip("_"), "args": list(args)},
            "no error",
            f"{type(e).__name__}: {e}",
            CheckStatus.FAIL,
        )
    return report.checks


def _run_tasks(suite: str, ranges: dict[str, Any], tasks: list[Task]) -> VerificationReport:
    config = get_config()
    AncLogger.info(f"Running {suite} suite: {ranges}")
    start = time.perf_counter()
    jobs = tqdm(tasks, desc=suite, disable=not config.verify.progress, file=sys.stderr)
    results = Parallel(n_jobs=config.enumeration.workers)(
        delayed(_run_task)(config, suite, fn, args) for fn, args in jobs
    )
    report = VerificationReport(suite=suite, ranges=ranges)
    for records in results:
        report.extend(records)
    report.wall_time = time.perf_counter() - start
    AncLogger.info(
        f"{suite}: {report.passed:,} of {report.attempted:,} checks passed, "
        f"{report.informational:,} informational, {report.wall_time:.2f}s"
    )
    if report.first_failure is not None:
        AncLogger.warning(f"{suite} first failure: {report.first_failure.to_json()}")
    return report


def _bounds(bounds: Optional[VerifyConfig]) -> VerifyConfig:
    return bounds if bounds is not None else get_config().verify


# parameter grids shared by the csp and counts suites

def nara1_params(n: int, m: int) -> Iterator[tuple[int, int, int, int, int]]:
    """(c, r, s, R, S) with 1 <= c <= min(n, m), 0 <= r <= R <= n-c, 0 <= s <= S <= m-c."""
    for c in range(1, min(n, m) + 1):
        for R in range(0, n - c + 1):
            for S in range(0, m - c + 1):
                for r in range(0, R + 1):
                    for s in range(0, S + 1):
                        yield c, r, s, R, S


def nara2_params(n: int, m: int) -> Iterator[tuple[int, int, int]]:
    """(c, r, s) with 1 <= c <= min(n, m), 0 <= r <= n-c, 0 <= s <= m-c."""
    for c in range(1, min(n, m) + 1):
        for r in range(0, n - c + 1):
            for s in range(0, m - c + 1):
                yield c, r, s


def _profile_params(p: CycleProfile) -> dict[str, Any]:
    return {
        "c": p.c, "r": p.r, "s": p.s, "R": p.R, "S": p.S,
        "alpha": str(p.alpha), "beta": str(p.beta), "lam": str(p.lam), "mu": str(p.mu),
    }


LEVEL_KEYS: dict[str, Callable[[CycleProfile], tuple]] = {
    "kre": CycleProfile.key,
    "csp": CycleProfile.key,
    "nara1": lambda p: (p.c, p.r, p.s, p.R, p.S),
    "nara2": lambda p: (p.c, p.r, p.s),
    "nara3": lambda p: (p.c,),
    "cat": lambda p: (),
}
"""Projection of a profile onto the parameters of each sieving level."""


def sieving_levels(n: int, m: int) -> Iterator[tuple[str, dict[str, Any], tuple, QPolynomial]]:
    """(level, params, key, polynomial) for every parameter set of every level."""
    for p in iter_profiles(n, m):
        yield "kre", _profile_params(p), p.key(), annular_kreweras_q(p)
        yield "csp", _profile_params(p), p.key(), rotation_csp_q(p)
    for c, r, s, R, S in nara1_params(n, m):
        params = {"c": c, "r": r, "s": s, "R": R, "S": S}
        yield "nara1", params, (c, r, s, R, S), annular_narayana1_q(n, m, c, r, s, R, S)
    for c, r, s in nara2_params(n, m):
        yield "nara2", {"c": c, "r": r, "s": s}, (c, r, s), annular_narayana2_q(n, m, c, r, s)
    for c in range(1, min(n, m) + 1):
        yield "nara3", {"c": c}, (c,), annular_narayana3_q(n, m, c)
    yield "cat", {}, (), annular_catalan_q(n, m)


# csp

def _csp_task(report: VerificationReport, n: int, m: int) -> None:
    catalog = catalog_with_profiles(n, m)
    levels = list(sieving_levels(n, m))
    values: dict[tuple, Any] = {}
    for d in divisors(math.gcd(n, m)):
        for rot in rotations_of_order(n, m, d):
            fixed = [profile for p, profile in catalog if apply_rotation(rot, p) == p]
            tallies = {
                level: Counter(key(profile) for profile in fixed)
                for level, key in LEVEL_KEYS.items()
            }
            if rot.is_rigid:
                check, status, roots = "csp", None, primitive_exponents(d)
            else:
                check, status, roots = "twisted", CheckStatus.INFO, [1]
            for level, params, key, poly in levels:
                for j in roots:
                    if (level, key, d, j) not in values:
                        values[level, key, d, j] = cyclotomic_as_integer(
                            eval_at_primitive_root(poly, d, j)
                        )
                    report.record(
                        check,
                        {"level": level, "n": n, "m": m, "d": d, "j": j, "rot": str(rot), **params},
                        values[level, key, d, j],
                        tallies[level][key],
                        status,
                    )
            if rot.is_rigid:
                for p in iter_profiles(n, m):
                    report.record(
                        "fixed-count",
                        {"n": n, "m": m, "d": d, "rot": str(rot), **_profile_params(p)},
                        fixed_count_formula(p, d),
                        tallies["kre"][p.key()],
                    )


def verify_csp_annular(max_total: Optional[int] = None) -> VerificationReport:
    """Cyclic sieving for the profile, Nara1, Nara2, Nara3 and Cat levels.

    For every (n, m) with n + m <= max_total, every d dividing gcd(n, m),
    every rigid rotation of order d and every primitive d-th root of unity,
    the polynomial's value must be an integer equal to the number of fixed
    permutations. The rotation-invariant count formula is checked against
    the same fixed points. Rotations of order d that are not rigid are
    recorded as informational ``twisted`` checks.
    """
    max_total = max_total if max_total is not None else get_config().verify.csp_max_total
    tasks = [(_csp_task, (n, m)) for n, m in annulus_sizes(max_total)]
    return _run_tasks("csp", {"max_total": max_total}, tasks)


def _unequal_orders_task(report: VerificationReport, n: int, m: int) -> None:
    catalog = catalog_with_profiles(n, m)
    for rot in all_rotation_pairs(n, m):
        if rot.is_annular:
            continue
        fixed = sum(1 for p, _ in catalog if apply_rotation(rot, p) == p)
        report.record(
            "unequal-orders",
            {"n": n, "m": m, "rot": str(rot), "ext_order": rot.ext_order, "int_order": rot.int_order},
            0,
            fixed,
        )


def verify_unequal_orders(max_total: Optional[int] = None) -> VerificationReport:
    """No permutation is fixed by a rotation pair whose two orders differ."""
    max_total = max_total if max_total is not None else get_config().verify.unequal_max_total
    tasks = [(_unequal_orders_task, (n, m)) for n, m in annulus_sizes(max_total)]
    return _run_tasks("unequal-orders", {"max_total": max_total}, tasks)


# sum chain

def _sum_chain_task(report: VerificationReport, n: int, m: int) -> None:
    base = {"n": n, "m": m}
    for c, r, s, R, S in nara1_params(n, m):
        total = sum((annular_kreweras_q(p) for p in iter_profiles_at(n, m, c, R, S, r, s)), ZERO)
        report.record(
            "kre-to-nara1", {**base, "c": c, "r": r, "s": s, "R": R, "S": S},
            annular_narayana1_q(n, m, c, r, s, R, S), total,
        )
    for c, r, s in nara2_params(n, m):
        total = sum(
            (annular_narayana1_q(n, m, c, r, s, R, S)
             for R in range(r, n - c + 1) for S in range(s, m - c + 1)),
            ZERO,
        )
        report.record(
            "nara1-to-nara2", {**base, "c": c, "r": r, "s": s},
            annular_narayana2_q(n, m, c, r, s), total,
        )
    for c in range(1, min(n, m) + 1):
        total = sum(
            (annular_narayana2_q(n, m, c, r, s)
             for r in range(0, n - c + 1) for s in range(0, m - c + 1)),
            ZERO,
        )
        report.record("nara2-to-nara3", {**base, "c": c}, annular_narayana3_q(n, m, c), total)
    total = sum((annular_narayana3_q(n, m, c) for c in range(1, min(n, m) + 1)), ZERO)
    report.record("nara3-to-cat", base, annular_catalan_q(n, m), total)


def verify_sum_chain(max_n: Optional[int] = None, max_m: Optional[int] = None) -> VerificationReport:
    """The four summation identities Kre -> Nara1 -> Nara2 -> Nara3 -> Cat."""
    default = get_config().verify.sum_chain_max
    max_n = max_n if max_n is not None else default
    max_m = max_m if max_m is not None else default
    tasks = [
        (_sum_chain_task, (n, m))
        for n in range(1, max_n + 1)
        for m in range(1, max_m + 1)
    ]
    return _run_tasks("sum-chain", {"max_n": max_n, "max_m": max_m}, tasks)


# lemmas

def _sum2_task(report: VerificationReport, n: int) -> None:
    for k in range(1, n + 1):
        total = sum(
            (QPolynomial.q_power(k * (n - k) - tau(lam)) * q_multinomial_partition(k, lam)
             for lam in par_set(n, k)),
            ZERO,
        )
        report.record("sum2", {"n": n, "k": k}, q_binomial(n - 1, k - 1), total)


def _sum3_task(report: VerificationReport, n: int) -> None:
    for c in range(0, n + 1):
        for r in range(0, n - c + 1):
            total = ZERO
            for R in range(0, n - c + 1):
                term = shifted_q_binomial(R, r) * q_binomial(n - R, c)
                if term:
                    total = total + QPolynomial.q_power(r * (n - c - R)) * term
            report.record("sum3", {"n": n, "r": r, "c": c}, q_binomial(n, r + c), total)


def _sum1_task(report: VerificationReport, n: int, max_m: int, max_k: int) -> None:
    for m in range(0, max_m + 1):
        for k in range(0, max_k + 1):
            if n + m + k == 0:
                continue
            params = {"n": n, "m": m, "k": k}
            total = ZERO
            for c in range(0, min(n, m) + 1):
                total = total + (
                    QPolynomial.q_power(c * (c - 1 + k)) * q_int(2 * c + k)
                    * q_binomial(2 * n + k, n - c) * q_binomial(2 * m + k, m - c)
                )
                left = QPolynomial.q_power(c * (c - 1 + k)) * q_int(n + m + k) * q_int(2 * c + k)
                right = (
                    QPolynomial.q_power(c * (c - 1 + k)) * q_int(n + c + k) * q_int(m + c + k)
                    - QPolynomial.q_power((c + 1) * (c + k)) * q_int(n - c) * q_int(m - c)
                )
                report.record("sum1-step", {**params, "c": c}, right, left)
            numerator = (
                q_int(n + k) * q_int(m + k)
                * q_binomial(2 * n + k, n + k) * q_binomial(2 * m + k, m + k)
            )
            quotient, remainder = poly_divmod(numerator, q_int(n + m + k))
            expected = quotient if remainder.is_zero() else f"remainder {remainder}"
            report.record("sum1", params, expected, total)


def _vandermonde_task(report: VerificationReport, m: int, max_n: int) -> None:
    for n in range(0, max_n + 1):
        for k in range(0, m + n + 1):
            total = ZERO
            for i in range(0, min(k, n) + 1):
                if k - i > m:
                    continue
                total = total + (
                    QPolynomial.q_power(i * (m - k + i)) * q_binomial(m, k - i) * q_binomial(n, i)
                )
            report.record("q-vandermonde", {"m": m, "n": n, "k": k}, q_binomial(m + n, k), total)


def _root_eval_task(report: VerificationReport, n: int) -> None:
    for d in divisors(n):
        for j in primitive_exponents(d):
            params = {"n": n, "d": d, "j": j}
            report.record(
                "root-q-int", params, n if d == 1 else 0,
                cyclotomic_as_integer(eval_at_primitive_root(q_int(n), d, j)),
            )
            report.record(
                "root-q-int-ratio", params, n // d,
                cyclotomic_as_integer(
                    eval_at_primitive_root(exact_div(q_int(n), q_int(d)), d, j)
                ),
            )
            for k in range(0, n + 1):
                expected = binom(n // d, k // d) if k % d == 0 else 0
                report.record(
                    "root-q-binomial", {**params, "k": k}, expected,
                    cyclotomic_as_integer(eval_at_primitive_root(q_binomial(n, k), d, j)),
                )


def _power_task(report: VerificationReport, a: int, max_b: int) -> None:
    for b in range(1, max_b + 1):
        report.record(
            "q-int-power", {"a": a, "b": b},
            q_int(a * b), q_int(a) * q_int(b).substitute_power(a),
        )


def verify_lemmas(bounds: Optional[VerifyConfig] = None) -> VerificationReport:
    """The summation lemmas, q-Vandermonde, root-of-unity values of [n], [n]/[d]
    and q-binomials, and [ab]_q = [a]_q [b]_{q^a}."""
    bounds = _bounds(bounds)
    tasks: list[Task] = []
    tasks += [(_sum2_task, (n,)) for n in range(1, bounds.sum2_max_n + 1)]
    tasks += [(_sum3_task, (n,)) for n in range(0, bounds.sum3_max_n + 1)]
    tasks += [(_sum1_task, (n, bounds.sum1_max, bounds.sum1_max)) for n in range(0, bounds.sum1_max + 1)]
    tasks += [(_vandermonde_task, (m, bounds.vandermonde_max)) for m in range(0, bounds.vandermonde_max + 1)]
    tasks += [(_root_eval_task, (n,)) for n in range(1, bounds.root_eval_max_n + 1)]
    tasks += [(_power_task, (a, bounds.power_max)) for a in range(1, bounds.power_max + 1)]
    ranges = {
        "sum2_max_n": bounds.sum2_max_n,
        "sum3_max_n": bounds.sum3_max_n,
        "sum1_max": bounds.sum1_max,
        "vandermonde_max": bounds.vandermonde_max,
        "root_eval_max_n": bounds.root_eval_max_n,
        "power_max": bounds.power_max,
    }
    return _run_tasks("lemmas", ranges, tasks)


# polynomiality

def _nonnegative_quotient(numerator: QPolynomial, denominator: QPolynomial) -> bool:
    quotient, remainder = poly_divmod(numerator, denominator)
    return remainder.is_zero() and quotient.has_nonnegative_integer_coefficients()


def _polynomiality_first_task(report: VerificationReport, n: int) -> None:
    for k in range(1, n + 1):
        for lam in par_set(n, k):
            report.record(
                "polynomial-first", {"n": n, "k": k, "lam": str(lam)}, True,
                _nonnegative_quotient(q_int(n) * q_multinomial_partition(k, lam), q_int(k)),
            )


def _polynomiality_second_task(report: VerificationReport, N: int) -> None:
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            for lam in par_set(n, k):
                numerator = q_int(N - n) * q_binomial(N, k) * q_multinomial_partition(k, lam)
                report.record(
                    "polynomial-second", {"N": N, "n": n, "k": k, "lam": str(lam)}, True,
                    _nonnegative_quotient(numerator, q_int(N)),
                )


def _kreweras_factored_task(report: VerificationReport, n: int, m: int) -> None:
    for p in iter_profiles(n, m):
        params = {"n": n, "m": m, **_profile_params(p)}
        report.record(
            "kreweras-factored", params, annular_kreweras_q(p), annular_kreweras_q_factored(p)
        )
        report.record(
            "csp-polynomial", params, True, rotation_csp_q(p).has_nonnegative_integer_coefficients()
        )


def verify_polynomiality(bounds: Optional[VerifyConfig] = None) -> VerificationReport:
    """Quotients that must be polynomials with nonnegative integer coefficients.

    Covers [n]/[k] [k over lam] and [N-n]/[N] [N over k][k over lam] for
    lam in Par(n, k), n <= N, and the factored form of the annular q-Kreweras
    number over every profile with n + m <= csp_max_total.
    """
    bounds = _bounds(bounds)
    max_N = bounds.polynomiality_max_N
    tasks: list[Task] = []
    tasks += [(_polynomiality_first_task, (n,)) for n in range(1, max_N + 1)]
    tasks += [(_polynomiality_second_task, (N,)) for N in range(1, max_N + 1)]
    tasks += [(_kreweras_factored_task, (n, m)) for n, m in annulus_sizes(bounds.csp_max_total)]
    ranges = {"max_N": max_N, "max_total": bounds.csp_max_total}
    return _run_tasks("polynomiality", ranges, tasks)


# disc

def _disc_counts_task(report: VerificationReport, n: int) -> None:
    catalog = enumerate_nc_disc(n)
    report.record("disc-catalan", {"n": n}, catalan(n), len(catalog))
    by_type = Counter(disc_cycle_type(p) for p in catalog)
    by_cycles = Counter(len(p.cycles) for p in catalog)
    for k in range(1, n + 1):
        report.record("disc-narayana", {"n": n, "k": k}, narayana(n, k), by_cycles[k])
    for lam in partitions_of(n):
        report.record("disc-kreweras", {"n": n, "lam": str(lam)}, kreweras(lam), by_type[lam])


def _disc_q_task(report: VerificationReport, n: int) -> None:
    for k in range(1, n + 1):
        total = sum((kreweras_q(lam) for lam in par_set(n, k)), ZERO)
        report.record("disc-kreweras-sum", {"n": n, "k": k}, narayana_q(n, k), total)
    total = sum((narayana_q(n, k) for k in range(1, n + 1)), ZERO)
    report.record("disc-narayana-sum", {"n": n}, catalan_q(n), total)


def _disc_csp_task(report: VerificationReport, n: int) -> None:
    for lam in partitions_of(n):
        permutations = enumerate_nc_disc(n, lam)
        X = bessis_reiner_X(lam)
        for k in range(n):
            g = math.gcd(n, k)
            d, j = n // g, k // g
            value = cyclotomic_as_integer(eval_at_primitive_root(X, d, j if d > 1 else 1))
            fixed = sum(1 for p in permutations if rotate_disc(p, k) == p)
            report.record("disc-csp", {"n": n, "lam": str(lam), "k": k, "d": d}, value, fixed)


def verify_disc_identities(
    max_n: Optional[int] = None,
    q_max_n: Optional[int] = None,
    csp_max_n: Optional[int] = None,
) -> VerificationReport:
    """Disc counts against enumeration, the disc q-sums, and rotation sieving of the disc."""
    bounds = get_config().verify
    max_n = max_n if max_n is not None else bounds.disc_max_n
    q_max_n = q_max_n if q_max_n is not None else bounds.disc_q_max_n
    csp_max_n = csp_max_n if csp_max_n is not None else bounds.disc_csp_max_n
    tasks: list[Task] = []
    tasks += [(_disc_counts_task, (n,)) for n in range(1, max_n + 1)]
    tasks += [(_disc_q_task, (n,)) for n in range(1, q_max_n + 1)]
    tasks += [(_disc_csp_task, (n,)) for n in range(1, csp_max_n + 1)]
    ranges = {"max_n": max_n, "q_max_n": q_max_n, "csp_max_n": csp_max_n}
    return _run_tasks("disc", ranges, tasks)


# counts

def _counts_task(report: VerificationReport, n: int, m: int) -> None:
    base = {"n": n, "m": m}
    profiles = [profile for _, profile in catalog_with_profiles(n, m)]
    report.record("count-total", base, count_anc(n, m), len(profiles))
    report.record("count-total-q", base, count_anc(n, m), annular_catalan_q(n, m).at_one())

    by_c = Counter(p.c for p in profiles)
    for c in range(1, min(n, m) + 1):
        params = {**base, "c": c}
        report.record("count-c", params, count_anc(n, m, c), by_c[c])
        report.record("count-c-q", params, count_anc(n, m, c), annular_narayana3_q(n, m, c).at_one())

    by_crs = Counter((p.c, p.r, p.s) for p in profiles)
    for c, r, s in nara2_params(n, m):
        params = {**base, "c": c, "r": r, "s": s}
        expected = count_anc(n, m, c, r, s)
        report.record("count-crs", params, expected, by_crs[c, r, s])
        report.record("count-crs-q", params, expected, annular_narayana2_q(n, m, c, r, s).at_one())

    by_crsRS = Counter((p.c, p.r, p.s, p.R, p.S) for p in profiles)
    for c, r, s, R, S in nara1_params(n, m):
        params = {**base, "c": c, "r": r, "s": s, "R": R, "S": S}
        expected = count_anc(n, m, c, r, s, R, S)
        report.record("count-crsRS", params, expected, by_crsRS[c, r, s, R, S])
        report.record(
            "count-crsRS-q", params, expected,
            annular_narayana1_q(n, m, c, r, s, R, S).at_one(),
        )

    by_profile = Counter(p.key() for p in profiles)
    for p in iter_profiles(n, m):
        params = {**base, **_profile_params(p)}
        expected = count_anc_profile(p)
        report.record("count-profile", params, expected, by_profile[p.key()])
        report.record("count-profile-q", params, expected, annular_kreweras_q(p).at_one())


def _halved(profile: CycleProfile) -> Optional[CycleProfile]:
    if not profile.is_divisible_by(2):
        return None
    return CycleProfile.model_construct(
        n=profile.n // 2, m=profile.m // 2, c=profile.c // 2,
        r=profile.r // 2, s=profile.s // 2, R=profile.R // 2, S=profile.S // 2,
        alpha=divide(profile.alpha, 2), beta=divide(profile.beta, 2),
        lam=divide(profile.lam, 2), mu=divide(profile.mu, 2),
    )


def _type_b_task(report: VerificationReport, n: int, m: int) -> None:
    base = {"n": n, "m": m}
    halves = [_halved(profile_of(p)) for p in enumerate_anc_B(n, m)]
    report.record("type-B-divisible", base, 0, sum(1 for h in halves if h is None))
    profiles = [h for h in halves if h is not None]
    report.record("type-B-total", base, count_anc_B(n, m), len(halves))

    by_c = Counter(p.c for p in profiles)
    for c in range(1, min(n, m) + 1):
        filtered = enumerate_anc_B(n, m, ProfileFilter(c=c))
        report.record("type-B-c", {**base, "c": c}, count_anc_B(n, m, c=c), by_c[c])
        report.record("type-B-c-filter", {**base, "c": c}, by_c[c], len(filtered))

    by_crs = Counter((p.c, p.r, p.s) for p in profiles)
    for c, r, s in nara2_params(n, m):
        report.record(
            "type-B-crs", {**base, "c": c, "r": r, "s": s},
            count_anc_B(n, m, c=c, r=r, s=s), by_crs[c, r, s],
        )

    by_crsRS = Counter((p.c, p.r, p.s, p.R, p.S) for p in profiles)
    for c, r, s, R, S in nara1_params(n, m):
        report.record(
            "type-B-crsRS", {**base, "c": c, "r": r, "s": s, "R": R, "S": S},
            count_anc_B(n, m, c=c, r=r, s=s, R=R, S=S), by_crsRS[c, r, s, R, S],
        )

    by_profile = Counter(p.key() for p in profiles)
    for p in iter_profiles(n, m):
        expected = count_anc_B(
            n, m, c=p.c, r=p.r, s=p.s, R=p.R, S=p.S,
            alpha=p.alpha, beta=p.beta, lam=p.lam, mu=p.mu,
        )
        report.record("type-B-profile", {**base, **_profile_params(p)}, expected, by_profile[p.key()])


def _matchings_task(report: VerificationReport, n: int, m: int) -> None:
    base = {"n": n, "m": m}
    matchings = enumerate_matchings(n, m)
    report.record("matching-total", base, matching_total(n, m), len(matchings))
    by_c = Counter(connected_pair_count(p) for p in matchings)
    for c in range(1, min(n, m) + 1):
        if (n - c) % 2:
            continue
        expected = matching_count(n, m, c)
        report.record("matching-c", {**base, "c": c}, expected, by_c[c])
        report.record(
            "matching-profile", {**base, "c": c}, expected, count_anc_profile(matching_profile(n, m, c))
        )


def _matching_sum_task(report: VerificationReport, n: int, m: int, k: int) -> None:
    N, M = 2 * n + k, 2 * m + k
    params = {"n": n, "m": m, "k": k}
    by_c = sum(matching_count(N, M, 2 * c + k) for c in range(0, min(n, m) + 1) if 2 * c + k >= 1)
    report.record("matching-sum1", params, sum1_at_one(n, m, k), matching_total(N, M))
    report.record("matching-sum1-terms", params, matching_total(N, M), by_c)


def verify_counts(max_total: Optional[int] = None, bounds: Optional[VerifyConfig] = None) -> VerificationReport:
    """Closed-form counts against enumeration at every granularity.

    Also covers the type-B counts for n, m <= type_b_max_half with
    2(n + m) <= max_total, the matching counts for n + m <=
    matchings_max_total, and the matching totals against the summation lemma
    at q = 1.
    """
    bounds = _bounds(bounds)
    max_total = max_total if max_total is not None else bounds.counts_max_total
    half = bounds.type_b_max_half
    matchings_max = bounds.matchings_max_total
    tasks: list[Task] = [(_counts_task, (n, m)) for n, m in annulus_sizes(max_total)]
    tasks += [
        (_type_b_task, (n, m))
        for n, m in annulus_sizes(max_total // 2)
        if n <= half and m <= half
    ]
    tasks += [
        (_matchings_task, (n, m))
        for n, m in annulus_sizes(matchings_max)
        if (n - m) % 2 == 0
    ]
    tasks += [
        (_matching_sum_task, (n, m, k))
        for k in (0, 1)
        for n in range(0, matchings_max + 1)
        for m in range(0, matchings_max + 1)
        if min(2 * n + k, 2 * m + k) >= 1 and 2 * (n + m + k) <= matchings_max
    ]
    ranges = {"max_total": max_total, "type_b_max_half": half, "matchings_max_total": matchings_max}
    return _run_tasks("counts", ranges, tasks)


# bijection

def _bijection_task(report: VerificationReport, n: int, m: int, d: int) -> None:
    rot = rigid_rotation(n, m, d)
    images: dict[tuple, list] = {}
    for p, profile in catalog_with_profiles(n, m):
        if not profile.is_divisible_by(d) or apply_rotation(rot, p) != p:
            continue
        tuples = images.setdefault(profile.key(), [])
        for cycle in p.cycles:
            if min(cycle) <= n < max(cycle):
                tuples.append(bijection_phi(cycle, p, d))
    for p in iter_profiles(n, m):
        if not p.is_divisible_by(d):
            continue
        tuples = images.get(p.key(), [])
        params = {"n": n, "m": m, "d": d, **_profile_params(p)}
        codomain = bijection_codomain_size(p, d)
        report.record("bijection-codomain-size", params, p.c * fixed_count_formula(p, d), codomain)
        report.record("bijection-domain-size", params, codomain, len(tuples))
        report.record("bijection-injective", params, len(tuples), len(set(tuples)))
        report.record(
            "bijection-codomain", params, True,
            all(in_bijection_codomain(t, p, d) for t in tuples),
        )


def verify_bijection(max_total: Optional[int] = None) -> VerificationReport:
    """The rotation-invariance bijection for d in {1, 2}.

    For each profile divisible by d, the pairs (connected cycle, permutation
    fixed by the order-d rotation) must map injectively into the codomain, and
    both sides must have c times the fixed-count formula elements.
    """
    max_total = max_total if max_total is not None else get_config().verify.bijection_max_total
    tasks = [
        (_bijection_task, (n, m, d))
        for n, m in annulus_sizes(max_total)
        for d in (1, 2)
        if n % d == 0 and m % d == 0
    ]
    return _run_tasks("bijection", {"max_total": max_total}, tasks)


# suite registry

SUITES = ("csp", "counts", "identities", "lemmas", "polynomiality", "bijection")
"""Suite names accepted by `run_suite`; ``all`` runs every one in this order."""


def cap_bounds(bounds: VerifyConfig, max_total: int) -> VerifyConfig:
    """Bounds with every sweep limit lowered to at most max_total."""
    update = {
        name: min(value, max_total)
        for name, value in bounds.model_dump().items()
        if isinstance(value, int) and not isinstance(value, bool)
        and name != "type_b_max_half"
    }
    return bounds.model_copy(update=update)


def run_suite(name: str, bounds: Optional[VerifyConfig] = None) -> list[VerificationReport]:
    """Runs the named suite (or ``all``) and returns its reports in order.

    Raises:
        ValueError: for an unknown suite name
    """
    bounds = _bounds(bounds)
    if name == "all":
        return [report for suite in SUITES for report in run_suite(suite, bounds)]
    if name == "csp":
        return [
            verify_csp_annular(bounds.csp_max_total),
            verify_unequal_orders(bounds.unequal_max_total),
        ]
    if name == "counts":
        return [verify_counts(bounds.counts_max_total, bounds)]
    if name == "identities":
        return [
            verify_sum_chain(bounds.sum_chain_max, bounds.sum_chain_max),
            _disc_with_bounds(bounds),
        ]
    if name == "lemmas":
        return [verify_lemmas(bounds)]
    if name == "polynomiality":
        return [verify_polynomiality(bounds)]
    if name == "bijection":
        return [verify_bijection(bounds.bijection_max_total)]
    raise ValueError(f"Unknown suite '{name}'; choose from {', '.join(SUITES)} or all")


def _disc_with_bounds(bounds: VerifyConfig) -> VerificationReport:
    return verify_disc_identities(bounds.disc_max_n, bounds.disc_q_max_n, bounds.disc_csp_max_n)
