"""Closed-form counts and q-polynomials for noncrossing permutations.

Disc case (permutations of [n]):
    catalan, narayana, kreweras and their q-analogs catalan_q, narayana_q,
    kreweras_q, plus the rotation sieving polynomial bessis_reiner_X.

Annulus case (permutations of [n+m]):
    annular_kreweras_q (full profile), annular_narayana1_q / 2_q / 3_q (coarser
    granularities), annular_catalan_q (all connected objects), the rotation
    sieving polynomial rotation_csp_q, the plain counts count_anc / count_anc_B,
    the fixed-point count fixed_count_formula and the matching counts.

Every quotient is an exact polynomial division; a nonzero remainder raises
`DivisionWithRemainder` instead of being rounded away.
"""
import math
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    DivisionWithRemainder,
    NegativeExponentError,
    ParityError,
    PartitionError,
    ProfileError,
)
from .models import CycleProfile, ExponentQuadruple, make_profile
from .partitions import Partition, divide, par_set, rearrangement_count, tau
from .qcalc import (
    ONE,
    ZERO,
    QPolynomial,
    exact_div,
    q_binomial,
    q_int,
    q_multinomial_partition,
)


def _exact_int_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise DivisionWithRemainder(numerator, denominator, remainder)
    return quotient


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def shifted_binom(R: int, r: int) -> int:
    """C(R-1, r-1) with C(-1, -1) = 1, so no exterior cycles contribute 1."""
    if R == 0 and r == 0:
        return 1
    return binom(R - 1, r - 1)


def shifted_q_binomial(R: int, r: int) -> QPolynomial:
    """q-analog of `shifted_binom`."""
    if R == 0 and r == 0:
        return ONE
    return q_binomial(R - 1, r - 1)


# disc case

def catalan(n: int) -> int:
    """Cat(n) = C(2n, n)/(n+1)."""
    return _exact_int_div(math.comb(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    """Nara(n, k) = C(n, k-1) C(n, k)/n; number of noncrossing permutations of [n] with k cycles."""
    if n == 0:
        return 1 if k == 0 else 0
    return _exact_int_div(binom(n, k - 1) * binom(n, k), n)


def kreweras(lam: Partition) -> int:
    """Kre(lam) = C(n, k-1) (k over lam)/k for lam in Par(n, k)."""
    n, k = lam.weight, lam.length
    if k == 0:
        return 1
    return _exact_int_div(binom(n, k - 1) * rearrangement_count(lam), k)


def kreweras_q(lam: Partition) -> QPolynomial:
    """q^((n+1)(n-k) - tau(lam)) / [k] * [n over k-1] [k over lam]."""
    n, k = lam.weight, lam.length
    if k == 0:
        return ONE
    numerator = q_binomial(n, k - 1) * q_multinomial_partition(k, lam)
    exponent = (n + 1) * (n - k) - tau(lam)
    return QPolynomial.q_power(exponent) * exact_div(numerator, q_int(k))


def narayana_q(n: int, k: int) -> QPolynomial:
    """q^((n-k)(n+1-k)) / [n] * [n over k-1] [n over k]."""
    if n == 0:
        return ONE if k == 0 else ZERO
    numerator = q_binomial(n, k - 1) * q_binomial(n, k)
    if numerator.is_zero():
        return ZERO
    return QPolynomial.q_power((n - k) * (n + 1 - k)) * exact_div(numerator, q_int(n))


def catalan_q(n: int) -> QPolynomial:
    """[2n over n] / [n+1]."""
    return exact_div(q_binomial(2 * n, n), q_int(n + 1))


def bessis_reiner_X(lam: Partition) -> QPolynomial:
    """[n over k-1] [k over lam] / [k]: sieves noncrossing permutations of type lam under rotation."""
    n, k = lam.weight, lam.length
    if k == 0:
        return ONE
    return exact_div(q_binomial(n, k - 1) * q_multinomial_partition(k, lam), q_int(k))


# annulus case

def exponents(p: CycleProfile) -> ExponentQuadruple:
    """The q-exponents X, Y, Z, W of a profile.

    Raises:
        NegativeExponentError: if W < 0, which no valid profile produces
    """
    n, m, c, r, s, R, S = p.n, p.m, p.c, p.r, p.s, p.R, p.S
    X, Y, Z = _xyz(n, m, c, r, s, R, S)
    W = (
        r * (R - r) + s * (S - s) + c * (n - R - c) + c * (m - S - c)
        - tau(p.alpha) - tau(p.beta) - tau(p.lam) - tau(p.mu)
    )
    if W < 0:
        raise NegativeExponentError(f"W={W} < 0 for profile {p}")
    return ExponentQuadruple.model_construct(X=X, Y=Y, Z=Z, W=W)


def _xyz(n: int, m: int, c: int, r: int, s: int, R: int, S: int) -> tuple[int, int, int]:
    X = c * (c - 1)
    Y = r * (c + r) + s * (c + s)
    Z = r * (n - c - R) + s * (m - c - S)
    return X, Y, Z


def _with_annular_prefactor(n: int, m: int, c: int, exponent: int,
                            binomials: QPolynomial) -> QPolynomial:
    """q^exponent [nm]/([n][m]) [2c]/2 * binomials.

    [nm][2c]/([n][m]) alone is not always a polynomial, so the division is
    applied to the whole product.
    """
    numerator = q_int(n * m) * q_int(2 * c) * binomials
    return QPolynomial.q_power(exponent) * exact_div(numerator, q_int(n) * q_int(m)) / 2


def _profile_binomials(p: CycleProfile) -> QPolynomial:
    """[n over r][m over s][r over alpha][s over beta][c over lam][c over mu]."""
    return (
        q_binomial(p.n, p.r) * q_binomial(p.m, p.s)
        * q_multinomial_partition(p.r, p.alpha) * q_multinomial_partition(p.s, p.beta)
        * q_multinomial_partition(p.c, p.lam) * q_multinomial_partition(p.c, p.mu)
    )


def annular_kreweras_q(p: CycleProfile) -> QPolynomial:
    """Annular q-Kreweras number of a full profile.

    q^(X+Y+Z+W) [nm]/([n][m]) [2c]/2 [n-R][m-S]/[c]^2 times the six binomials
    and multinomials of `_profile_binomials`. At q = 1 this is the number of
    permutations with the profile.
    """
    quad = exponents(p)
    numerator = (
        q_int(p.n * p.m) * q_int(2 * p.c) * q_int(p.n - p.R) * q_int(p.m - p.S)
        * _profile_binomials(p)
    )
    denominator = q_int(p.n) * q_int(p.m) * q_int(p.c) * q_int(p.c)
    return QPolynomial.q_power(quad.total) * exact_div(numerator, denominator) / 2


def annular_kreweras_q_factored(p: CycleProfile) -> QPolynomial:
    """The same polynomial assembled from three separately polynomial factors.

    q^(X+Y+Z+W) [2c]/(2[c]) * ([n-R]/[n] [n over r][r over alpha])
    * ([m-S]/[c] [c over mu]) * ([nm]/[m] [m over s][s over beta][c over lam]).
    Each bracketed factor is divided on its own, so a remainder in any one of
    them raises.
    """
    quad = exponents(p)
    first = exact_div(
        q_int(p.n - p.R) * q_binomial(p.n, p.r) * q_multinomial_partition(p.r, p.alpha),
        q_int(p.n),
    )
    second = exact_div(q_int(p.m - p.S) * q_multinomial_partition(p.c, p.mu), q_int(p.c))
    third = exact_div(
        q_int(p.n * p.m) * q_binomial(p.m, p.s)
        * q_multinomial_partition(p.s, p.beta) * q_multinomial_partition(p.c, p.lam),
        q_int(p.m),
    )
    leading = exact_div(q_int(2 * p.c), q_int(p.c)) / 2
    return QPolynomial.q_power(quad.total) * leading * first * second * third


def rotation_csp_q(p: CycleProfile) -> QPolynomial:
    """[(n-R)(m-S)]/[c] times the six profile binomials, without q-prefactor."""
    numerator = q_int((p.n - p.R) * (p.m - p.S)) * _profile_binomials(p)
    return exact_div(numerator, q_int(p.c))


def annular_narayana1_q(n: int, m: int, c: int, r: int, s: int, R: int, S: int) -> QPolynomial:
    """q^(X+Y+Z) [nm]/([n][m]) [2c]/2 [n over r][m over s][R-1 over r-1][S-1 over s-1][n-R over c][m-S over c]."""
    binomials = (
        q_binomial(n, r) * q_binomial(m, s)
        * shifted_q_binomial(R, r) * shifted_q_binomial(S, s)
        * q_binomial(n - R, c) * q_binomial(m - S, c)
    )
    if binomials.is_zero() or c < 1:
        return ZERO
    X, Y, Z = _xyz(n, m, c, r, s, R, S)
    return _with_annular_prefactor(n, m, c, X + Y + Z, binomials)


def annular_narayana2_q(n: int, m: int, c: int, r: int, s: int) -> QPolynomial:
    """q^(X+Y) [nm]/([n][m]) [2c]/2 [n over r][m over s][n over r+c][m over s+c]."""
    binomials = (
        q_binomial(n, r) * q_binomial(m, s) * q_binomial(n, r + c) * q_binomial(m, s + c)
    )
    if binomials.is_zero() or c < 1:
        return ZERO
    X = c * (c - 1)
    Y = r * (c + r) + s * (c + s)
    return _with_annular_prefactor(n, m, c, X + Y, binomials)


def annular_narayana3_q(n: int, m: int, c: int) -> QPolynomial:
    """q^X [nm]/([n][m]) [2c]/2 [2n over n-c][2m over m-c]."""
    binomials = q_binomial(2 * n, n - c) * q_binomial(2 * m, m - c)
    if binomials.is_zero() or c < 1:
        return ZERO
    return _with_annular_prefactor(n, m, c, c * (c - 1), binomials)


def annular_catalan_q(n: int, m: int) -> QPolynomial:
    """[nm]/(2[m+n]) [2n over n][2m over m].

    Example:
        ```python
        str(annular_catalan_q(1, 1))   # '(1 + q)/2'
        ```
    """
    if n < 1 or m < 1:
        raise ProfileError(f"annular_catalan_q needs n, m >= 1; got n={n}, m={m}")
    numerator = q_int(n * m) * q_binomial(2 * n, n) * q_binomial(2 * m, m)
    return exact_div(numerator, q_int(m + n)) / 2


# profile sweeps

def iter_profiles(n: int, m: int, c: Optional[int] = None) -> Iterator[CycleProfile]:
    """Every profile admissible for (n, m), optionally with fixed c, in a fixed order."""
    c_values = [c] if c is not None else range(1, min(n, m) + 1)
    for cc in c_values:
        for R in range(0, n - cc + 1):
            for S in range(0, m - cc + 1):
                yield from iter_profiles_at(n, m, cc, R, S)


def iter_profiles_at(n: int, m: int, c: int, R: int, S: int,
                     r: Optional[int] = None, s: Optional[int] = None) -> Iterator[CycleProfile]:
    """Profiles with the given (c, R, S) and optionally fixed (r, s)."""
    if c < 1 or R > n - c or S > m - c or R < 0 or S < 0:
        return
    r_values = [r] if r is not None else range(0, R + 1)
    s_values = [s] if s is not None else range(0, S + 1)
    for rr in r_values:
        for ss in s_values:
            for alpha in par_set(R, rr):
                for beta in par_set(S, ss):
                    for lam in par_set(n - R, c):
                        for mu in par_set(m - S, c):
                            yield CycleProfile.model_construct(
                                n=n, m=m, c=c, r=rr, s=ss, R=R, S=S,
                                alpha=alpha, beta=beta, lam=lam, mu=mu,
                            )


# plain counts

def count_anc_profile(p: CycleProfile) -> int:
    """(n-R)(m-S)/c C(n,r) C(m,s) (r over alpha)(s over beta)(c over lam)(c over mu)."""
    numerator = (
        (p.n - p.R) * (p.m - p.S) * binom(p.n, p.r) * binom(p.m, p.s)
        * rearrangement_count(p.alpha) * rearrangement_count(p.beta)
        * rearrangement_count(p.lam) * rearrangement_count(p.mu)
    )
    return _exact_int_div(numerator, p.c)


def count_anc(
    n: int,
    m: int,
    c: Optional[int] = None,
    r: Optional[int] = None,
    s: Optional[int] = None,
    R: Optional[int] = None,
    S: Optional[int] = None,
    alpha: Optional[Partition] = None,
    beta: Optional[Partition] = None,
    lam: Optional[Partition] = None,
    mu: Optional[Partition] = None,
) -> int:
    """Number of connected (n, m)-annular noncrossing permutations.

    The granularity is chosen by which arguments are given: ``(n, m)``,
    ``(n, m, c)``, ``(n, m, c, r, s)``, ``(n, m, c, r, s, R, S)`` or all
    eleven parameters.

    Raises:
        ProfileError: for an unsupported combination of arguments or an
            inconsistent full profile
    """
    granularity = _granularity(c, r, s, R, S, alpha, beta, lam, mu)
    if n < 1 or m < 1:
        raise ProfileError(f"Circle sizes must be positive; got n={n}, m={m}")
    if granularity == "total":
        return _exact_int_div(n * m * math.comb(2 * n, n) * math.comb(2 * m, m), 2 * (m + n))
    if c < 1:
        return 0
    if granularity == "c":
        return c * binom(2 * n, n - c) * binom(2 * m, m - c)
    if granularity == "crs":
        return c * binom(n, r) * binom(m, s) * binom(n, r + c) * binom(m, s + c)
    if granularity == "crsRS":
        return (
            c * binom(n, r) * binom(m, s) * shifted_binom(R, r) * shifted_binom(S, s)
            * binom(n - R, c) * binom(m - S, c)
        )
    return count_anc_profile(make_profile(n, m, c, r, s, R, S, alpha, beta, lam, mu))


def count_anc_B(n: int, m: int, **kwargs) -> int:
    """Number of type-B objects in anc(2n, 2m) with halved parameters: twice `count_anc`."""
    return 2 * count_anc(n, m, **kwargs)


def _granularity(c, r, s, R, S, alpha, beta, lam, mu) -> str:
    given = tuple(x is not None for x in (c, r, s, R, S, alpha, beta, lam, mu))
    known = {
        (False,) * 9: "total",
        (True,) + (False,) * 8: "c",
        (True, True, True) + (False,) * 6: "crs",
        (True,) * 5 + (False,) * 4: "crsRS",
        (True,) * 9: "full",
    }
    if given not in known:
        names = ("c", "r", "s", "R", "S", "alpha", "beta", "lam", "mu")
        supplied = [name for name, flag in zip(names, given) if flag]
        raise ProfileError(
            f"Unsupported parameter combination {supplied}; give none, (c), (c,r,s), "
            "(c,r,s,R,S) or the full profile"
        )
    return known[given]


def fixed_count_formula(p: CycleProfile, d: int) -> int:
    """Number of permutations with profile p fixed by an annular rotation of order d.

    d (n^-R^)(m^-S^)/c^ C(n^,r^) C(m^,s^) (r^ over alpha^)(s^ over beta^)
    (c^ over lam^)(c^ over mu^), hats meaning division by d; zero unless
    every count and every partition is divisible by d.
    """
    if d < 1:
        raise ProfileError(f"Rotation order must be positive; got {d}")
    if not p.is_divisible_by(d):
        return 0
    n, m, c, r, s, R, S = (x // d for x in (p.n, p.m, p.c, p.r, p.s, p.R, p.S))
    numerator = (
        d * (n - R) * (m - S) * binom(n, r) * binom(m, s)
        * rearrangement_count(divide(p.alpha, d)) * rearrangement_count(divide(p.beta, d))
        * rearrangement_count(divide(p.lam, d)) * rearrangement_count(divide(p.mu, d))
    )
    return _exact_int_div(numerator, c)


# matchings

def matching_count(n: int, m: int, c: int) -> int:
    """Connected annular noncrossing matchings of [n+m] with c connected pairs.

    c C(n, (n-c)/2) C(m, (m-c)/2); zero when c > min(n, m).

    Raises:
        ParityError: unless n, m and c have the same parity
    """
    if (n - c) % 2 or (m - c) % 2:
        raise ParityError(f"matching_count needs n = m = c (mod 2); got n={n}, m={m}, c={c}")
    if c < 1 or c > min(n, m):
        return 0
    return c * math.comb(n, (n - c) // 2) * math.comb(m, (m - c) // 2)


def matching_total(n: int, m: int) -> int:
    """All connected annular noncrossing matchings of [n+m].

    2 ceil(n/2) ceil(m/2)/(n+m) C(n, ceil(n/2)) C(m, ceil(m/2)).

    Raises:
        ParityError: unless n = m (mod 2)
    """
    if (n - m) % 2:
        raise ParityError(f"matching_total needs n = m (mod 2); got n={n}, m={m}")
    if n < 1 or m < 1:
        return 0
    hn, hm = -(-n // 2), -(-m // 2)
    return _exact_int_div(2 * hn * hm * math.comb(n, hn) * math.comb(m, hm), n + m)


def matching_profile(n: int, m: int, c: int) -> CycleProfile:
    """The single profile shared by matchings with c connected pairs."""
    if (n - c) % 2 or (m - c) % 2 or c < 1 or c > min(n, m):
        raise ParityError(f"No matching profile for n={n}, m={m}, c={c}")
    r, s = (n - c) // 2, (m - c) // 2
    try:
        return make_profile(
            n, m, c, r, s, 2 * r, 2 * s,
            Partition.from_parts([2] * r), Partition.from_parts([2] * s),
            Partition.from_parts([1] * c), Partition.from_parts([1] * c),
        )
    except PartitionError as e:
        raise ProfileError(str(e)) from e


def sum1_at_one(n: int, m: int, k: int) -> Fraction:
    """(n+k)(m+k)/(n+m+k) C(2n+k, n+k) C(2m+k, m+k)."""
    return Fraction(
        (n + k) * (m + k) * binom(2 * n + k, n + k) * binom(2 * m + k, m + k), n + m + k
    )
