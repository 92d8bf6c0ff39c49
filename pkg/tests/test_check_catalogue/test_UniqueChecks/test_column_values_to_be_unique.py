from __future__ import annotations

import pytest
from narwhals.typing import Frame

from laasim.check import CheckSuite
from laasim.check_catalogue.UniqueChecks import ColumnValuesToBeUnique
from laasim.errors import NetworkValidationError
from tests.utils.create_frames import create_frame_fixture


@create_frame_fixture
def lf() -> dict[str, list]:
    return {
        "id": ["Z1", "Z2", "Z2", "Z3"],
        "demand": [100.0, 200.0, 300.0, 400.0],
    }


def test_unique_column_passes(lf: Frame) -> None:
    result = ColumnValuesToBeUnique("demand").__execute_check__(frame=lf)
    assert result["result"]["status"] == "Success"


def test_duplicate_id_fails(lf: Frame) -> None:
    result = ColumnValuesToBeUnique("id").__execute_check__(frame=lf)
    assert result["result"]["status"] == "Fail"
    assert result["result"]["failing_items"] == ["Z2"]
    assert result["result"]["failed_number"] == 2


def test_duplicate_id_raises(lf: Frame) -> None:
    suite = CheckSuite(lf, table="zones").UniqueChecks.ColumnValuesToBeUnique("id")
    with pytest.raises(NetworkValidationError, match="ColumnValuesToBeUnique_id"):
        suite.validate()
