import pytest

from anc_sieve.annulus import (
    AnnularPermutation,
    bijection_codomain_size,
    bijection_phi,
    in_bijection_codomain,
    profile_of,
)
from anc_sieve.errors import PreconditionError
from anc_sieve.formulas import fixed_count_formula
from anc_sieve.models import BijectionTuple
from anc_sieve.report import VerificationReport
from anc_sieve.verify import _bijection_task, verify_bijection


@pytest.fixture
def small_case() -> AnnularPermutation:
    return AnnularPermutation.parse(2, 1, "(1,3)(2)")


def test_phi_on_smallest_case(small_case):
    t = bijection_phi((1, 3), small_case, 1)
    assert t == BijectionTuple(
        a=1, b=1, R_E=(2,), R_I=(), V_E=(1,), V_I=(), V_CE=(1,), V_CI=(1,)
    )
    profile = profile_of(small_case)
    assert in_bijection_codomain(t, profile, 1)
    assert bijection_codomain_size(profile, 1) == 2
    assert bijection_codomain_size(profile, 1) == profile.c * fixed_count_formula(profile, 1)


def test_phi_accepts_any_rotation_of_the_cycle(small_case):
    assert bijection_phi((3, 1), small_case, 1) == bijection_phi((1, 3), small_case, 1)


def test_codomain_is_empty_when_not_divisible(small_case):
    assert bijection_codomain_size(profile_of(small_case), 2) == 0


@pytest.mark.parametrize(
    "n, m, text, cycle, d",
    [
        (2, 2, "(1)(2)(3)(4)", (1,), 1),  # not annular noncrossing
        (2, 1, "(1,3)(2)", (2,), 1),      # not a connected cycle
        (2, 1, "(1,3)(2)", (1, 2), 1),    # not a cycle of p
        (2, 1, "(1,3)(2)", (1, 3), 2),    # profile not divisible
        (2, 2, "(1,3)(2)(4)", (1, 3), 2),
    ],
)
def test_preconditions(n, m, text, cycle, d):
    with pytest.raises(PreconditionError):
        bijection_phi(cycle, AnnularPermutation.parse(n, m, text), d)


def test_verify_bijection_small():
    report = verify_bijection(3)
    assert report.attempted > 0
    assert report.ok, report.first_failure


def test_phi_under_half_turn():
    p = AnnularPermutation.parse(2, 2, "(1,3)(2,4)")
    assert bijection_phi((1, 3), p, 2) == BijectionTuple(
        a=1, b=1, R_E=(), R_I=(), V_E=(), V_I=(), V_CE=(1,), V_CI=(1,)
    )
    assert bijection_phi((2, 4), p, 2) == BijectionTuple(
        a=2, b=2, R_E=(), R_I=(), V_E=(), V_I=(), V_CE=(1,), V_CI=(1,)
    )
    twin = AnnularPermutation.parse(2, 2, "(1,4)(2,3)")
    tuples = {bijection_phi(cycle, q, 2) for q in (p, twin) for cycle in q.cycles}
    profile = profile_of(p)
    assert len(tuples) == bijection_codomain_size(profile, 2) == 4
    assert all(in_bijection_codomain(t, profile, 2) for t in tuples)


@pytest.mark.parametrize("n, m", [(2, 2), (4, 2), (2, 4)])
def test_bijection_under_half_turn(n, m):
    report = VerificationReport(suite="bijection")
    _bijection_task(report, n, m, 2)
    assert report.ok, report.first_failure
    domain = [c for c in report.checks if c.check == "bijection-domain-size"]
    assert domain and all(c.params["d"] == 2 for c in domain)
    assert any(c.expected > 0 for c in domain)


def test_verify_bijection_covers_half_turns():
    report = verify_bijection(4)
    assert report.ok, report.first_failure
    assert {c.params["d"] for c in report.checks} == {1, 2}
