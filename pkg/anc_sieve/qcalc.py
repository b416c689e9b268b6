"""Exact polynomials in q over the rationals, q-analog building blocks and
evaluation at roots of unity.

`QPolynomial` stores integer numerators over one common positive denominator,
which keeps arithmetic in Python integers while still allowing coefficients
such as the halves in ``(1 + q)/2``. Root-of-unity values are computed exactly
in the power basis modulo a cyclotomic polynomial; there is no floating point
anywhere.

Example:
    ```python
    from anc_sieve.qcalc import q_binomial, eval_at_primitive_root, cyclotomic_as_integer

    p = q_binomial(4, 2)           # 1 + q + 2q^2 + q^3 + q^4
    cyclotomic_as_integer(eval_at_primitive_root(p, 2))   # 2
    ```
"""
import functools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionWithRemainder, NegativeExponentError, NotPrimitiveRoot, PartitionError

Scalar = Union[int, Fraction]


def _strip(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True, eq=False)
class QPolynomial:
    """Polynomial in q with exact rational coefficients.

    The value is ``sum(numerators[i] * q**i) / denominator`` with the
    denominator positive, coprime to the numerators' gcd, and no trailing zero
    numerator. The zero polynomial has no numerators and denominator 1. Use
    `QPolynomial.from_coefficients` rather than the raw constructor.
    """
    numerators: tuple[int, ...] = ()
    denominator: int = 1

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar]) -> "QPolynomial":
        """Builds a polynomial from ascending coefficients (ints or Fractions)."""
        coeffs = [Fraction(c) for c in coefficients]
        denominator = 1
        for c in coeffs:
            denominator = math.lcm(denominator, c.denominator)
        numerators = [int(c * denominator) for c in coeffs]
        return cls._normalized(numerators, denominator)

    @classmethod
    def _normalized(cls, numerators: list[int], denominator: int) -> "QPolynomial":
        numerators = _strip(list(numerators))
        if not numerators:
            return cls((), 1)
        if denominator < 0:
            numerators = [-x for x in numerators]
            denominator = -denominator
        g = denominator
        for x in numerators:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            numerators = [x // g for x in numerators]
            denominator //= g
        return cls(tuple(numerators), denominator)

    @classmethod
    def constant(cls, value: Scalar) -> "QPolynomial":
        return cls.from_coefficients([value])

    @classmethod
    def q_power(cls, exponent: int, coefficient: Scalar = 1) -> "QPolynomial":
        """Returns coefficient * q**exponent."""
        if exponent < 0:
            raise NegativeExponentError(f"q-exponent must be nonnegative; got {exponent}")
        return cls.from_coefficients([0] * exponent + [coefficient])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Ascending coefficients as Fractions."""
        return tuple(Fraction(x, self.denominator) for x in self.numerators)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.numerators) - 1

    def is_zero(self) -> bool:
        return not self.numerators

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.numerators):
            return Fraction(self.numerators[i], self.denominator)
        return Fraction(0)

    def has_integer_coefficients(self) -> bool:
        return self.denominator == 1

    def has_nonnegative_integer_coefficients(self) -> bool:
        return self.denominator == 1 and all(x >= 0 for x in self.numerators)

    def is_symmetric(self) -> bool:
        """True if the coefficient sequence is a palindrome (ignoring low zeros)."""
        low = 0
        while low < len(self.numerators) and self.numerators[low] == 0:
            low += 1
        body = self.numerators[low:]
        return body == body[::-1]

    # arithmetic

    @staticmethod
    def _coerce(other: object) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: object) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        denominator = math.lcm(self.denominator, other.denominator)
        a = denominator // self.denominator
        b = denominator // other.denominator
        size = max(len(self.numerators), len(other.numerators))
        result = [0] * size
        for i, x in enumerate(self.numerators):
            result[i] += a * x
        for i, x in enumerate(other.numerators):
            result[i] += b * x
        return QPolynomial._normalized(result, denominator)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-x for x in self.numerators), self.denominator)

    def __sub__(self, other: object) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other: object) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        result = [0] * (len(self.numerators) + len(other.numerators) - 1)
        for i, x in enumerate(self.numerators):
            if x == 0:
                continue
            for j, y in enumerate(other.numerators):
                result[i + j] += x * y
        return QPolynomial._normalized(result, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPolynomial":
        if exponent < 0:
            raise ValueError(f"Negative power {exponent} of a polynomial")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: object) -> "QPolynomial":
        """Division by a nonzero scalar; use `exact_div` for polynomial divisors."""
        if isinstance(other, QPolynomial):
            return exact_div(self, other)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QPolynomial divided by zero")
            scale = Fraction(other)
            return QPolynomial._normalized(
                [x * scale.denominator for x in self.numerators],
                self.denominator * scale.numerator,
            )
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.numerators == other.numerators and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerators, self.denominator))

    # evaluation

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point (Horner's rule)."""
        total = Fraction(0)
        for c in reversed(self.numerators):
            total = total * x + c
        return total / self.denominator

    __call__ = evaluate

    def at_one(self) -> Fraction:
        return Fraction(sum(self.numerators), self.denominator)

    def substitute_power(self, a: int) -> "QPolynomial":
        """Returns p(q**a)."""
        if a < 1:
            raise ValueError(f"substitute_power needs a >= 1; got {a}")
        if self.is_zero():
            return ZERO
        result = [0] * (a * self.degree + 1)
        for i, x in enumerate(self.numerators):
            result[a * i] = x
        return QPolynomial(tuple(result), self.denominator)

    # text and JSON

    def to_json(self) -> dict:
        """JSON form ``{"coeffs": [[num, den], ...]}`` with decimal strings."""
        return {
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coefficients]
        }

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        return cls.from_coefficients(
            Fraction(int(num), int(den)) for num, den in data["coeffs"]
        )

    def format(self, variable: str = "q") -> str:
        """Human-readable form in ascending powers, e.g. ``(1 + q)/2``."""
        if self.is_zero():
            return "0"
        terms: list[str] = []
        for i, x in enumerate(self.numerators):
            if x == 0:
                continue
            magnitude = abs(x)
            if i == 0:
                body = str(magnitude)
            else:
                power = variable if i == 1 else f"{variable}^{i}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(body if x > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if x > 0 else f"- {body}")
        text = " ".join(terms)
        if self.denominator == 1:
            return text
        if len(terms) > 1:
            text = f"({text})"
        return f"{text}/{self.denominator}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"QPolynomial({self.format()!r})"


ZERO = QPolynomial()
ONE = QPolynomial((1,), 1)
Q = QPolynomial((0, 1), 1)


def poly_divmod(p: QPolynomial, d: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
    """Euclidean division p = quotient*d + remainder with deg(remainder) < deg(d)."""
    if d.is_zero():
        raise ZeroDivisionError("Polynomial division by zero")
    if p.degree < d.degree:
        return ZERO, p
    # numerators only; the denominators are folded back in at the end
    divisor = d.numerators
    lead = divisor[-1]
    remainder: list = list(p.numerators)
    quotient: list = [0] * (p.degree - d.degree + 1)
    for k in range(len(quotient) - 1, -1, -1):
        top = remainder[k + d.degree]
        if top == 0:
            continue
        if isinstance(top, int) and top % lead == 0:
            t = top // lead
        else:
            t = Fraction(top) / lead
        quotient[k] = t
        for i, y in enumerate(divisor):
            remainder[k + i] -= t * y
    scale = Fraction(d.denominator, p.denominator)
    q_poly = QPolynomial.from_coefficients(quotient) * scale
    r_poly = QPolynomial.from_coefficients(remainder[: d.degree]) / p.denominator
    return q_poly, r_poly


def exact_div(p: QPolynomial, d: QPolynomial) -> QPolynomial:
    """Returns p/d, raising DivisionWithRemainder unless d divides p exactly."""
    quotient, remainder = poly_divmod(p, d)
    if not remainder.is_zero():
        raise DivisionWithRemainder(p, d, remainder)
    return quotient


@functools.lru_cache(maxsize=None)
def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0; got {n}")
    return QPolynomial((1,) * n, 1)


@functools.lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0; got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial coefficient; zero when k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def q_multinomial(counts: Sequence[int]) -> QPolynomial:
    """[sum(counts)]_q! / prod([c]_q!)."""
    denominator = ONE
    for c in counts:
        denominator = denominator * q_factorial(c)
    return exact_div(q_factorial(sum(counts)), denominator)


def q_multinomial_partition(k: int, lam) -> QPolynomial:
    """The q-multinomial [k over lam] = [k]_q! / prod_i [m_i]_q!.

    Args:
        k: number of parts lam must have
        lam: a `Partition`

    Raises:
        PartitionError: if lam does not have exactly k parts
    """
    if lam.length != k:
        raise PartitionError(f"Partition {lam} has {lam.length} parts, expected {k}")
    return _q_multinomial_cached(tuple(sorted(lam.multiplicities.values())))


@functools.lru_cache(maxsize=None)
def _q_multinomial_cached(counts: tuple[int, ...]) -> QPolynomial:
    return q_multinomial(counts)


@functools.lru_cache(maxsize=None)
def q_pochhammer(r: int) -> QPolynomial:
    """(q;q)_r = (1 - q)(1 - q^2)...(1 - q^r)."""
    if r < 0:
        raise ValueError(f"q_pochhammer needs r >= 0; got {r}")
    if r == 0:
        return ONE
    return q_pochhammer(r - 1) * (ONE - QPolynomial.q_power(r))


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> QPolynomial:
    """Phi_d(q) via Phi_d = (q^d - 1) / prod of Phi_e over proper divisors e of d."""
    if d < 1:
        raise ValueError(f"cyclotomic_polynomial needs d >= 1; got {d}")
    numerator = QPolynomial.q_power(d) - ONE
    denominator = ONE
    for e in range(1, d):
        if d % e == 0:
            denominator = denominator * cyclotomic_polynomial(e)
    return exact_div(numerator, denominator)


def euler_phi(d: int) -> int:
    return sum(1 for j in range(1, d + 1) if math.gcd(j, d) == 1)


def primitive_exponents(d: int) -> list[int]:
    """Exponents j in [1, d] with gcd(j, d) = 1."""
    return [j for j in range(1, d + 1) if math.gcd(j, d) == 1]


class NotAnIntegerType(Enum):
    """Sentinel type for `NotAnInteger`."""
    NOT_AN_INTEGER = "NotAnInteger"

    def __repr__(self) -> str:
        return "NotAnInteger"

    def __bool__(self) -> bool:
        return False


NotAnInteger = NotAnIntegerType.NOT_AN_INTEGER
"""Returned by `cyclotomic_as_integer` for values that are not rational integers."""


@dataclass(frozen=True)
class CyclotomicValue:
    """Element of Q(zeta_d) in the power basis modulo Phi_d.

    Attributes:
        order: d
        residue: polynomial of degree < phi(d) in zeta_d
    """
    order: int
    residue: QPolynomial

    def __post_init__(self):
        if self.residue.degree >= euler_phi(self.order):
            raise ValueError(
                f"Residue degree {self.residue.degree} too large for order {self.order}"
            )

    def is_rational(self) -> bool:
        return self.residue.degree <= 0

    def is_integer(self) -> bool:
        return self.is_rational() and self.residue.denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.residue.coefficient(0)

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.as_fraction())
        return f"{self.residue.format('z')} (z = primitive {self.order}-th root of unity)"


def eval_at_primitive_root(p: QPolynomial, d: int, j: int = 1) -> CyclotomicValue:
    """Exact value of p at zeta_d**j, a primitive d-th root of unity.

    For d = 1 this is p(1).

    Raises:
        NotPrimitiveRoot: if gcd(j, d) != 1
    """
    if d < 1:
        raise NotPrimitiveRoot(f"Root order must be positive; got {d}")
    if math.gcd(j, d) != 1:
        raise NotPrimitiveRoot(f"zeta_{d}^{j} is not primitive: gcd({j}, {d}) != 1")
    folded = [0] * d
    for i, x in enumerate(p.numerators):
        if x:
            folded[(i * j) % d] += x
    reduced = QPolynomial._normalized(folded, p.denominator)
    _, residue = poly_divmod(reduced, cyclotomic_polynomial(d))
    return CyclotomicValue(order=d, residue=residue)


def cyclotomic_as_integer(v: CyclotomicValue) -> Union[int, NotAnIntegerType]:
    """The integer value of v, or NotAnInteger."""
    if v.is_integer():
        return int(v.as_fraction())
    return NotAnInteger
