import json
from fractions import Fraction

import pandas as pd
import pandera as pa
import pytest

from anc_sieve.qcalc import NotAnInteger, QPolynomial
from anc_sieve.report import (
    CheckStatus,
    VerificationChecksTable,
    VerificationReport,
    as_check_value,
    summarize_reports,
)


@pytest.fixture
def report() -> VerificationReport:
    report = VerificationReport(suite="counts", ranges={"max_total": 3})
    report.record("count-total", {"n": 1, "m": 1}, 1, 1)
    report.record("count-total", {"n": 2, "m": 1}, 4, 3)
    report.record("twisted", {"n": 2, "m": 2}, 1, 0, CheckStatus.INFO)
    report.record("count-total", {"n": 1, "m": 2}, 4, 5)
    return report


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, 3),
        (True, "true"),
        (None, None),
        (Fraction(6, 3), 2),
        (Fraction(1, 2), "1/2"),
        (QPolynomial.from_coefficients([1, 0, 1]), "1 + q^2"),
        ("x", "x"),
    ],
)
def test_as_check_value(value, expected):
    assert as_check_value(value) == expected


def test_not_an_integer_is_recorded_as_failure():
    report = VerificationReport(suite="csp")
    record = report.record("csp", {"d": 4}, NotAnInteger, 0)
    assert record.status == CheckStatus.FAIL
    assert isinstance(record.expected, str)


def test_totals(report):
    assert report.attempted == 3
    assert report.passed == 1
    assert report.failed == 2
    assert report.informational == 1
    assert not report.ok
    assert report.first_failure.params == {"n": 2, "m": 1}


def test_json_lines(report):
    lines = list(report.to_json_lines())
    assert len(lines) == 5
    first = json.loads(lines[0])
    assert first == {
        "suite": "counts", "check": "count-total", "params": {"n": 1, "m": 1},
        "expected": 1, "actual": 1, "status": "pass",
    }
    summary = json.loads(lines[-1])
    assert summary["summary"] is True
    assert summary["failed"] == 2
    assert summary["first_failure"]["actual"] == 3
    assert "wall_time" not in summary

    report.wall_time = 1.5
    timed = json.loads(list(report.to_json_lines(timing=True))[-1])
    assert timed["wall_time"] == 1.5


def test_checks_df(report):
    df = report.checks_df()
    assert list(df.columns) == ["suite", "check_name", "params", "expected", "actual", "status"]
    assert df["status"].tolist() == ["pass", "fail", "info", "fail"]
    assert df.loc[0, "params"] == '{"m": 1, "n": 1}'


def test_checks_table_rejects_unknown_status():
    df = pd.DataFrame(
        [{"suite": "x", "check_name": "y", "params": "{}", "expected": "1",
          "actual": "1", "status": "maybe"}]
    )
    with pytest.raises(pa.errors.SchemaError):
        VerificationChecksTable.validate(df)


def test_summarize_reports(report):
    report.wall_time = 0.123
    summary_df, table = summarize_reports([report, VerificationReport(suite="empty")])
    assert summary_df["suite"].tolist() == ["counts", "empty"]
    assert summary_df.loc[0, "failed"] == 2
    assert summary_df.loc[0, "wall_time"] == 0.12
    assert "| suite" in table
