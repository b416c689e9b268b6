from fractions import Fraction

import pytest

from anc_sieve.errors import ParityError, ProfileError
from anc_sieve.formulas import (
    annular_catalan_q,
    annular_kreweras_q,
    annular_kreweras_q_factored,
    annular_narayana1_q,
    annular_narayana2_q,
    annular_narayana3_q,
    bessis_reiner_X,
    catalan,
    catalan_q,
    count_anc,
    count_anc_B,
    count_anc_profile,
    exponents,
    fixed_count_formula,
    iter_profiles,
    kreweras,
    kreweras_q,
    matching_count,
    matching_profile,
    matching_total,
    narayana,
    narayana_q,
    rotation_csp_q,
    shifted_binom,
    sum1_at_one,
)
from anc_sieve.models import make_profile
from anc_sieve.partitions import EMPTY_PARTITION, Partition
from anc_sieve.qcalc import ONE, ZERO, QPolynomial

E = EMPTY_PARTITION


def P(*parts: int) -> Partition:
    return Partition(parts=parts)


def poly(*coefficients) -> QPolynomial:
    return QPolynomial.from_coefficients(coefficients)


def test_disc_counts():
    assert catalan(3) == 5
    assert narayana(3, 2) == 3
    assert kreweras(P(2, 1, 1)) == 6
    assert shifted_binom(0, 0) == 1
    assert shifted_binom(3, 2) == 2


def test_disc_q_analogs():
    assert kreweras_q(P(1, 1, 1)) == ONE
    assert kreweras_q(P(2)).at_one() == 1
    assert catalan_q(2) == poly(1, 0, 1)
    assert narayana_q(4, 4) == ONE
    assert bessis_reiner_X(P(1, 1, 1, 1)) == ONE
    assert bessis_reiner_X(P(2, 1)) == poly(1, 1, 1)
    assert bessis_reiner_X(P(2, 1, 1)).at_one() == 6


def test_exponents():
    one = make_profile(1, 1, 1, 0, 0, 0, 0, E, E, P(1), P(1))
    assert (exponents(one).X, exponents(one).Y, exponents(one).Z, exponents(one).W) == (0, 0, 0, 0)

    mixed = make_profile(2, 2, 1, 1, 1, 1, 1, P(1), P(1), P(1), P(1))
    quad = exponents(mixed)
    assert (quad.X, quad.Y, quad.Z, quad.W) == (0, 4, 0, 0)

    matchings = make_profile(2, 2, 2, 0, 0, 0, 0, E, E, P(1, 1), P(1, 1))
    quad = exponents(matchings)
    assert (quad.X, quad.Y, quad.Z, quad.W) == (2, 0, 0, 0)


def test_annular_kreweras_q():
    one = make_profile(1, 1, 1, 0, 0, 0, 0, E, E, P(1), P(1))
    assert annular_kreweras_q(one) == poly(Fraction(1, 2), Fraction(1, 2))
    assert annular_kreweras_q(one) == annular_catalan_q(1, 1)

    matchings = make_profile(2, 2, 2, 0, 0, 0, 0, E, E, P(1, 1), P(1, 1))
    assert annular_kreweras_q(matchings).at_one() == 2


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_kreweras_at_one_is_the_profile_count(n, m):
    for p in iter_profiles(n, m):
        assert annular_kreweras_q(p).at_one() == count_anc_profile(p)
        assert annular_kreweras_q_factored(p) == annular_kreweras_q(p)
        assert rotation_csp_q(p).has_nonnegative_integer_coefficients()


def test_annular_narayana():
    # q^4 (1 + q^2)(1 + q)^2 / 2
    expected = poly(0, 0, 0, 0, 1, 2, 2, 2, 1) / 2
    assert annular_narayana1_q(2, 2, 1, 1, 1, 1, 1) == expected
    assert annular_narayana1_q(2, 2, 1, 1, 1, 1, 1).at_one() == 4
    assert annular_narayana3_q(2, 2, 3) == ZERO
    assert annular_narayana2_q(2, 2, 0, 1, 1) == ZERO


def test_annular_catalan():
    assert str(annular_catalan_q(1, 1)) == "(1 + q)/2"
    assert annular_catalan_q(2, 2).at_one() == 18
    assert annular_catalan_q(2, 1).at_one() == 4
    with pytest.raises(ProfileError):
        annular_catalan_q(0, 3)


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 3)])
def test_counts_refine_consistently(n, m):
    total = count_anc(n, m)
    assert sum(count_anc(n, m, c=c) for c in range(1, min(n, m) + 1)) == total
    assert sum(count_anc_profile(p) for p in iter_profiles(n, m)) == total
    assert annular_catalan_q(n, m).at_one() == total


def test_count_anc_examples():
    assert count_anc(2, 2, c=1) == 16
    assert count_anc(2, 2, c=2) == 2
    assert count_anc(2, 2) == 18
    assert count_anc(1, 1) == 1
    assert count_anc_B(1, 1) == 2
    assert count_anc_B(1, 1, c=1) == 2


def test_count_anc_rejects_partial_parameter_sets():
    with pytest.raises(ProfileError):
        count_anc(2, 2, r=1)
    with pytest.raises(ProfileError):
        count_anc(2, 2, c=1, r=0)


def test_fixed_count_formula():
    matchings = make_profile(2, 2, 2, 0, 0, 0, 0, E, E, P(1, 1), P(1, 1))
    assert fixed_count_formula(matchings, 2) == 2
    assert fixed_count_formula(matchings, 1) == count_anc_profile(matchings)

    mixed = make_profile(2, 2, 1, 1, 1, 1, 1, P(1), P(1), P(1), P(1))
    assert fixed_count_formula(mixed, 2) == 0


def test_matching_counts():
    assert matching_count(2, 2, 2) == 2
    assert matching_count(4, 2, 2) == 8
    assert matching_count(2, 2, 4) == 0
    assert matching_total(2, 2) == 2
    assert matching_total(4, 2) == matching_count(4, 2, 2)
    with pytest.raises(ParityError):
        matching_count(2, 1, 1)
    with pytest.raises(ParityError):
        matching_total(3, 2)


@pytest.mark.parametrize("n, m, c", [(2, 2, 2), (4, 2, 2), (3, 3, 1), (3, 3, 3), (4, 4, 2)])
def test_matching_profile_count(n, m, c):
    assert count_anc_profile(matching_profile(n, m, c)) == matching_count(n, m, c)


def test_sum1_at_one_matches_matching_totals():
    for n in range(0, 3):
        for m in range(0, 3):
            for k in (0, 1):
                if min(2 * n + k, 2 * m + k) < 1:
                    continue
                assert sum1_at_one(n, m, k) == matching_total(2 * n + k, 2 * m + k)


def test_make_profile_names_the_violation():
    with pytest.raises(ProfileError, match="lam"):
        make_profile(2, 2, 1, 0, 0, 0, 0, E, E, P(1), P(2))
