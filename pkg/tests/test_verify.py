import pytest

from anc_sieve.config import VerifyConfig
from anc_sieve.report import CheckStatus, VerificationReport
from anc_sieve.verify import (
    SUITES,
    _csp_task,
    _root_eval_task,
    _type_b_task,
    annulus_sizes,
    cap_bounds,
    divisors,
    run_suite,
    verify_counts,
    verify_csp_annular,
    verify_disc_identities,
    verify_lemmas,
    verify_polynomiality,
    verify_sum_chain,
    verify_unequal_orders,
)

SMALL_LEMMAS = VerifyConfig(
    sum2_max_n=5,
    sum3_max_n=5,
    sum1_max=3,
    vandermonde_max=4,
    root_eval_max_n=8,
    power_max=4,
)


def assert_passes(report: VerificationReport) -> None:
    assert report.attempted > 0
    assert report.ok, report.first_failure


def test_divisors_and_sizes():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert list(annulus_sizes(3)) == [(1, 1), (1, 2), (2, 1)]


def test_csp():
    report = verify_csp_annular(4)
    assert_passes(report)
    assert report.ranges == {"max_total": 4}
    assert {c.check for c in report.checks} >= {"csp", "fixed-count"}


def test_twisted_rotations_are_informational():
    report = VerificationReport(suite="csp")
    _csp_task(report, 3, 3)
    assert report.informational > 0
    assert report.ok
    twisted = [c for c in report.checks if c.check == "twisted"]
    assert twisted
    assert all(c.status == CheckStatus.INFO for c in twisted)
    # rigid rotation of order 3 at the c = 3 profile fixes all three permutations
    rigid_c3 = [
        c for c in report.checks
        if c.check == "csp" and c.params["level"] == "nara3"
        and c.params["d"] == 3 and c.params["c"] == 3
    ]
    assert rigid_c3 and all(c.actual == 3 for c in rigid_c3)


def test_unequal_orders():
    assert_passes(verify_unequal_orders(4))


def test_sum_chain():
    report = verify_sum_chain(3, 3)
    assert_passes(report)
    assert report.checks[-1].check == "nara3-to-cat"


def test_lemmas():
    assert_passes(verify_lemmas(SMALL_LEMMAS))


def test_root_values_of_q_int():
    report = VerificationReport(suite="lemmas")
    _root_eval_task(report, 6)
    assert_passes(report)
    plain = {c.params["d"]: c.expected for c in report.checks if c.check == "root-q-int"}
    ratio = {c.params["d"]: c.expected for c in report.checks if c.check == "root-q-int-ratio"}
    assert plain == {1: 6, 2: 0, 3: 0, 6: 0}
    assert ratio == {1: 6, 2: 3, 3: 2, 6: 1}


def test_polynomiality():
    assert_passes(verify_polynomiality(VerifyConfig(polynomiality_max_N=5, csp_max_total=4)))


def test_disc():
    assert_passes(verify_disc_identities(4, 4, 4))


def test_counts():
    report = verify_counts(4, VerifyConfig(type_b_max_half=1, matchings_max_total=6))
    assert_passes(report)
    checks = {c.check for c in report.checks}
    assert {"count-total", "type-B-total", "matching-total", "matching-sum1"} <= checks


@pytest.mark.parametrize("n, m", [(2, 1), (2, 2)])
def test_type_B_counts_at_half_size_two(n, m):
    report = VerificationReport(suite="counts")
    _type_b_task(report, n, m)
    assert_passes(report)
    filtered = [c for c in report.checks if c.check == "type-B-c-filter"]
    assert len(filtered) == min(n, m)
    assert any(c.check == "type-B-profile" and c.expected > 0 for c in report.checks)


def test_reports_do_not_depend_on_timing():
    first = list(verify_unequal_orders(3).to_json_lines())
    second = list(verify_unequal_orders(3).to_json_lines())
    assert first == second


def test_cap_bounds():
    capped = cap_bounds(VerifyConfig(), 4)
    assert capped.csp_max_total == 4
    assert capped.root_eval_max_n == 4
    assert capped.type_b_max_half == 2
    assert capped.progress is False
    assert VerifyConfig().csp_max_total == 8


def test_run_suite():
    bounds = cap_bounds(VerifyConfig(), 3)
    reports = run_suite("csp", bounds)
    assert [r.suite for r in reports] == ["csp", "unequal-orders"]
    assert all(r.ok for r in reports)
    assert "identities" in SUITES
    with pytest.raises(ValueError, match="Unknown suite"):
        run_suite("everything", bounds)
