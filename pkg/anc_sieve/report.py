"""Verification reports.

A suite produces one `CheckRecord` per comparison it makes and collects them,
in sweep order, into a `VerificationReport`. The first failing record is the
minimal witness for that sweep order.

Serialized form is JSON lines: one line per check followed by one summary
line. Wall time is only written when asked for, so re-running a suite gives
byte-identical output.
"""
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Iterator, Optional, Union

import pandas as pd
import pandera as pa
from pandera import Field
from pandera.typing import Series
from pydantic import BaseModel, ConfigDict
from tabulate import tabulate

from .qcalc import NotAnIntegerType, QPolynomial

CheckValue = Union[int, str, None]


class CheckStatus(str, Enum):
    """Outcome of a single check.

    | Status | Meaning                                                        |
    |--------|----------------------------------------------------------------|
    | pass   | expected and actual agree                                      |
    | fail   | expected and actual disagree, or a value was not an integer    |
    | info   | recorded for reference only; never counted as pass or fail     |
    """
    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


def as_check_value(value: Any) -> CheckValue:
    """JSON-friendly form of a compared value."""
    if isinstance(value, bool):
        return str(value).lower()
    if value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, QPolynomial):
        return value.format()
    if isinstance(value, NotAnIntegerType):
        return repr(value)
    return str(value)


class CheckRecord(BaseModel):
    """One comparison made by a suite.

    Attributes:
        suite: name of the suite that ran the check
        check: what was compared, e.g. "csp" or "sum2"
        params: parameters of the comparison, in sweep order
        expected: value predicted by the formula
        actual: value found by enumeration or by the other side of an identity
        status: pass, fail or info
    """
    model_config = ConfigDict(frozen=True)

    suite: str
    check: str
    params: dict[str, Any]
    expected: CheckValue = None
    actual: CheckValue = None
    status: CheckStatus

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "check": self.check,
            "params": self.params,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status.value,
        }


class VerificationReport(BaseModel):
    """Every check a suite made, with pass/fail totals.

    Attributes:
        suite: suite name
        ranges: the bounds swept, e.g. ``{"max_total": 8}``
        checks: check records in sweep order
        wall_time: seconds spent; not serialized unless requested
    """
    model_config = ConfigDict(validate_assignment=True)

    suite: str
    ranges: dict[str, Any] = {}
    checks: list[CheckRecord] = []
    wall_time: Optional[float] = None

    def record(
        self,
        check: str,
        params: dict[str, Any],
        expected: Any,
        actual: Any,
        status: Optional[CheckStatus] = None,
    ) -> CheckRecord:
        """Appends a check; status defaults to pass iff expected == actual."""
        if status is None:
            status = CheckStatus.PASS if expected == actual else CheckStatus.FAIL
        record = CheckRecord(
            suite=self.suite,
            check=check,
            params=params,
            expected=as_check_value(expected),
            actual=as_check_value(actual),
            status=status,
        )
        self.checks.append(record)
        return record

    def extend(self, records: Iterable[CheckRecord]) -> None:
        self.checks.extend(records)

    @property
    def attempted(self) -> int:
        """Checks that count towards pass/fail."""
        return sum(1 for c in self.checks if c.status != CheckStatus.INFO)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == CheckStatus.PASS)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == CheckStatus.FAIL)

    @property
    def informational(self) -> int:
        return sum(1 for c in self.checks if c.status == CheckStatus.INFO)

    @property
    def first_failure(self) -> Optional[CheckRecord]:
        return next((c for c in self.checks if c.status == CheckStatus.FAIL), None)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self, timing: bool = False) -> dict[str, Any]:
        first_failure = self.first_failure
        summary = {
            "suite": self.suite,
            "summary": True,
            "ranges": self.ranges,
            "attempted": self.attempted,
            "passed": self.passed,
            "failed": self.failed,
            "informational": self.informational,
            "first_failure": first_failure.to_json() if first_failure else None,
        }
        if timing:
            summary["wall_time"] = self.wall_time
        return summary

    def to_json_lines(self, timing: bool = False) -> Iterator[str]:
        """One line per check, then the summary line."""
        for check in self.checks:
            yield json.dumps(check.to_json(), separators=(",", ":"), sort_keys=True)
        yield json.dumps(self.summary(timing), separators=(",", ":"), sort_keys=True)

    def checks_df(self) -> pd.DataFrame:
        """The checks as a validated `VerificationChecksTable`."""
        rows = [
            {
                "suite": c.suite,
                "check_name": c.check,
                "params": json.dumps(c.params, sort_keys=True),
                "expected": "" if c.expected is None else str(c.expected),
                "actual": "" if c.actual is None else str(c.actual),
                "status": c.status.value,
            }
            for c in self.checks
        ]
        df = pd.DataFrame(rows, columns=CHECK_COLUMNS)
        return VerificationChecksTable.validate(df)


CHECK_COLUMNS = ["suite", "check_name", "params", "expected", "actual", "status"]


class VerificationChecksTable(pa.DataFrameModel):
    """Tabular view of a report's checks.

    Fields:
        suite: suite name
        check_name: what was compared
        params: JSON text of the parameters
        expected: expected value as text, empty when not applicable
        actual: actual value as text, empty when not applicable
        status: one of the CheckStatus values
    """
    suite: Series[str] = Field(coerce=True, nullable=False)
    check_name: Series[str] = Field(coerce=True, nullable=False)
    params: Series[str] = Field(coerce=True, nullable=False)
    expected: Series[str] = Field(coerce=True, nullable=False)
    actual: Series[str] = Field(coerce=True, nullable=False)
    status: Series[str] = Field(coerce=True, nullable=False)

    @pa.check("status")
    def check_valid_status(cls, status: Series) -> Series[bool]:
        """Validate that status values are valid CheckStatus enum values."""
        valid_statuses = {e.value for e in CheckStatus}
        return status.isin(valid_statuses)

    class Config:
        strict = True
        coerce = True


def summarize_reports(reports: Iterable[VerificationReport]) -> tuple[pd.DataFrame, str]:
    """Per-suite totals as a DataFrame and as a printable table."""
    rows = [
        {
            "suite": report.suite,
            "attempted": report.attempted,
            "passed": report.passed,
            "failed": report.failed,
            "info": report.informational,
            "wall_time": round(report.wall_time, 2) if report.wall_time is not None else None,
        }
        for report in reports
    ]
    summary_df = pd.DataFrame(
        rows, columns=["suite", "attempted", "passed", "failed", "info", "wall_time"]
    )
    table = tabulate(summary_df, headers="keys", tablefmt="github", showindex=False)
    return summary_df, table
