from __future__ import annotations

from typing import Literal

import narwhals as nw
import pytest
from narwhals.typing import Frame, IntoFrame

from laasim.base import BaseCheck
from laasim.check import CheckSuite
from laasim.errors import DanglingReferenceError, NetworkValidationError
from tests.utils import ReturnT, create_frame_fixture


@create_frame_fixture
def generators() -> dict[str, list]:
    return {
        "id": ["G1", "G2", "G3", "G4"],
        "zone": ["Z1", "Z1", "Z2", "Z7"],
        "rating": [500.0, 300.0, 800.0, 200.0],
        "headroom": [50.0, 400.0, 80.0, 20.0],
    }


class HeadroomWithinRating(BaseCheck):
    """Headroom may never exceed the machine rating."""

    def __init__(
        self,
        column: str = "id",
        impact: Literal["low", "medium", "high"] = "medium",
        threshold: float = 0.00,
    ) -> None:
        super().__init__(column, impact, threshold)

    @property
    def fail_message(self) -> str:
        return "Generator headroom exceeds its rating."

    def __call__(self, frame: Frame) -> Frame:
        return (
            frame.filter(nw.col("headroom") > nw.col("rating"))
            .group_by(self.column)
            .agg(nw.col(self.column).count().alias(f"{self.column}-count"))
        )


def test_custom_check_runs_through_suite(generators: IntoFrame) -> None:
    suite = CheckSuite(generators, table="generators").add_check(HeadroomWithinRating())
    result = suite.results["HeadroomWithinRating_id"]
    assert result["result"]["status"] == "Fail"
    assert result["result"]["failing_items"] == ["G2"]
    assert result["table"] == "generators"
    # medium impact is logged, not raised
    suite.validate()


class NotACheck: ...


def test_adding_invalid_check_fails_high(generators: IntoFrame) -> None:
    suite = CheckSuite(generators).add_check(NotACheck())  # type: ignore[arg-type]
    assert suite.failed("high") == ["NotACheck"]
    with pytest.raises(NetworkValidationError, match="NotACheck"):
        suite.validate()


def test_chained_checks_and_summary(generators: ReturnT) -> None:
    suite = (
        CheckSuite(generators, table="generators")
        .UniqueChecks.ColumnValuesToBeUnique("id")
        .ReferenceChecks.ColumnValuesToBeInList("zone", ["Z1", "Z2"])
        .ValueChecks.ColumnValuesToBeBetween("rating", min_value=0, closed="right")
    )
    assert len(suite) == 3
    assert suite.summary["passed"] is False
    assert suite.failed() == ["ColumnValuesToBeInList_zone"]

    table = suite.summary_table()
    assert "ColumnValuesToBeInList" in table
    assert "Z7" in table


def test_first_high_failure_picks_error_class(generators: ReturnT) -> None:
    suite = (
        CheckSuite(generators, table="generators")
        .ReferenceChecks.ColumnValuesToBeInList("zone", ["Z1", "Z2"])
        .ValueChecks.ColumnValuesToBeBetween("rating", max_value=600)
    )
    with pytest.raises(DanglingReferenceError) as exc_info:
        suite.validate()

    message = str(exc_info.value)
    assert "ColumnValuesToBeInList_zone" in message
    assert "ColumnValuesToBeBetween_rating" in message
    assert "Failed check(s) on 'generators'" in message


def test_same_check_twice_on_one_column(generators: ReturnT) -> None:
    suite = (
        CheckSuite(generators)
        .ValueChecks.ColumnValuesToBeBetween("rating", min_value=0)
        .ValueChecks.ColumnValuesToBeBetween("rating", max_value=100)
    )
    assert suite.summary["checks"] == [
        "ColumnValuesToBeBetween_rating",
        "ColumnValuesToBeBetween_rating_1",
    ]


def test_validate_without_checks_raises(generators: ReturnT) -> None:
    with pytest.raises(ValueError, match="No checks"):
        CheckSuite(generators).validate()


def test_display_summary_prints_table(
    generators: ReturnT,
    capsys: pytest.CaptureFixture[str],
) -> None:
    CheckSuite(generators).UniqueChecks.ColumnValuesToBeUnique("id").display_summary()
    assert "ColumnValuesToBeUnique" in capsys.readouterr().out


def test_repr_counts_rows(generators: ReturnT) -> None:
    suite = CheckSuite(generators, table="generators")
    assert repr(suite) == "CheckSuite(table='generators', rows=4, checks=0)"


def test_group_call_forwards_positional_arguments(generators: ReturnT) -> None:
    suite = CheckSuite(generators).ReferenceChecks.ColumnValuesToBeInList(
        "zone",
        ["Z1", "Z2", "Z7"],
    )
    result = suite.results["ColumnValuesToBeInList_zone"]
    assert result["column"] == "zone"
    assert result["impact"] == "high"
    assert result["result"]["status"] == "Success"
