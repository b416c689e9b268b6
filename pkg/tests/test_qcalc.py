from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from anc_sieve.errors import DivisionWithRemainder, NotPrimitiveRoot
from anc_sieve.formulas import annular_catalan_q
from anc_sieve.partitions import Partition
from anc_sieve.qcalc import (
    ONE,
    Q,
    ZERO,
    NotAnInteger,
    QPolynomial,
    cyclotomic_as_integer,
    cyclotomic_polynomial,
    eval_at_primitive_root,
    exact_div,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial_partition,
    q_pochhammer,
)


def poly(*coefficients) -> QPolynomial:
    return QPolynomial.from_coefficients(coefficients)


def root_value(p: QPolynomial, d: int, j: int = 1):
    return cyclotomic_as_integer(eval_at_primitive_root(p, d, j))


polynomials = st.tuples(
    st.lists(st.integers(min_value=-6, max_value=6), max_size=7),
    st.integers(min_value=1, max_value=4),
).map(lambda t: QPolynomial.from_coefficients(t[0]) / t[1])


@pytest.mark.parametrize(
    "n, expected",
    [(0, ZERO), (1, ONE), (4, poly(1, 1, 1, 1))],
)
def test_q_int(n, expected):
    assert q_int(n) == expected


@pytest.mark.parametrize(
    "n, expected",
    [(0, ONE), (2, poly(1, 1)), (3, poly(1, 2, 2, 1))],
)
def test_q_factorial(n, expected):
    assert q_factorial(n) == expected


def test_q_binomial():
    assert q_binomial(5, 0) == ONE
    assert q_binomial(4, 2) == poly(1, 1, 2, 1, 1)
    assert q_binomial(3, 5) == ZERO
    assert q_binomial(3, -1) == ZERO


@pytest.mark.parametrize(
    "k, parts, expected",
    [(2, (1, 1), ONE), (2, (2, 1), poly(1, 1)), (3, (1, 1, 1), ONE)],
)
def test_q_multinomial_partition(k, parts, expected):
    assert q_multinomial_partition(k, Partition(parts=parts)) == expected


def test_q_pochhammer():
    assert q_pochhammer(0) == ONE
    assert q_pochhammer(1) == poly(1, -1)
    assert q_pochhammer(2) == poly(1, -1, -1, 1)


def test_exact_div():
    assert exact_div(poly(-1, 0, 1), poly(-1, 1)) == poly(1, 1)
    assert exact_div(q_int(4) * q_int(3), q_int(2)) == q_binomial(4, 2)
    with pytest.raises(DivisionWithRemainder) as excinfo:
        exact_div(poly(1, 1), Q)
    assert excinfo.value.remainder == ONE


@given(a=polynomials, b=polynomials.filter(lambda p: not p.is_zero()))
def test_exact_div_undoes_multiplication(a, b):
    assert exact_div(a * b, b) == a


@given(a=polynomials, b=polynomials)
def test_addition_and_subtraction(a, b):
    assert (a + b) - b == a
    assert a + b == b + a


@given(
    a=st.integers(min_value=1, max_value=7),
    b=st.integers(min_value=1, max_value=7),
)
def test_q_int_power_substitution(a, b):
    assert q_int(a * b) == q_int(a) * q_int(b).substitute_power(a)


def test_cyclotomic_polynomial():
    assert cyclotomic_polynomial(1) == poly(-1, 1)
    assert cyclotomic_polynomial(4) == poly(1, 0, 1)
    assert cyclotomic_polynomial(6) == poly(1, -1, 1)


def test_eval_at_primitive_root():
    assert root_value(q_binomial(4, 2), 2) == 2
    assert root_value(q_int(6), 3) == 0
    assert root_value(exact_div(q_int(6), q_int(3)), 3) == 2
    assert root_value(ONE, 5) == 1
    assert root_value(Q, 4) is NotAnInteger
    assert root_value(annular_catalan_q(1, 1), 2) == 0
    assert root_value(annular_catalan_q(2, 2), 2) == 2


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_q_binomial_at_roots_of_unity(n):
    for d in range(2, n + 1):
        if n % d:
            continue
        assert root_value(q_int(n), d) == 0
        assert root_value(exact_div(q_int(n), q_int(d)), d) == n // d
        for k in range(n + 1):
            expected = q_binomial(n // d, k // d).at_one() if k % d == 0 else 0
            for j in range(1, d + 1):
                if all(j % p for p in range(2, d + 1) if d % p == 0):
                    assert root_value(q_binomial(n, k), d, j) == expected


def test_eval_rejects_non_primitive_exponent():
    with pytest.raises(NotPrimitiveRoot):
        eval_at_primitive_root(q_int(4), 4, 2)


def test_text_and_json_forms():
    cat = annular_catalan_q(1, 1)
    assert str(cat) == "(1 + q)/2"
    assert cat.to_json() == {"coeffs": [["1", "2"], ["1", "2"]]}
    assert QPolynomial.from_json(cat.to_json()) == cat
    assert poly(1, -2, 0, 1).format() == "1 - 2q + q^3"
    assert ZERO.format() == "0"
    assert poly(0, Fraction(3, 2)).format() == "3q/2"


def test_evaluate_and_at_one():
    p = q_binomial(4, 2)
    assert p.at_one() == 6
    assert p.evaluate(-1) == 2
    assert p.evaluate(Fraction(1, 2)) == Fraction(35, 16)
    assert p.has_nonnegative_integer_coefficients()
    assert not (p - 7).has_nonnegative_integer_coefficients()
