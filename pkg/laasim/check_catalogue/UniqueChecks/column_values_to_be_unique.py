from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import narwhals as nw
from narwhals.typing import Frame

from laasim.base import BaseCheck

if TYPE_CHECKING:
    from laasim.base.results_typedict import KwargsParams
    from laasim.errors import NetworkValidationError


class ColumnValuesToBeUnique(BaseCheck):
    """Check that no value appears twice in a column.

    Args:
        column (str): Column that must hold unique identifiers.
        threshold (float, optional): Tolerated failing share. Defaults to 0.0.
        impact (Literal["low", "medium", "high"], optional): Defaults to "high".

    """

    def __init__(
        self,
        column: str,
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        super().__init__(column, impact, threshold, error_cls, **kwargs)

    @property
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""
        return f"The column '{self.column}' has duplicated values."

    def __call__(self, frame: Frame) -> Frame:
        """Keep the duplicated values with their number of occurrences."""
        count_col = f"{self.column}-count"
        return (
            frame.group_by(self.column)
            .agg(nw.col(self.column).count().alias(count_col))
            .filter(nw.col(count_col) > 1)
        )
