from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import narwhals as nw
from narwhals.typing import Frame

from laasim.base import BaseCheck
from laasim.errors import DanglingReferenceError, NetworkValidationError

if TYPE_CHECKING:
    from laasim.base.results_typedict import KwargsParams


class ColumnValuesToBeInList(BaseCheck):
    """Check that every value of a column is one of the given values.

    Used to catch elements that point at zones missing from the model.

    Args:
        column (str): Column holding the references.
        values (list[str | int | float]): Allowed values.
        threshold (float, optional): Tolerated failing share. Defaults to 0.0.
        impact (Literal["low", "medium", "high"], optional): Defaults to "high".

    """

    error_cls: type[NetworkValidationError] = DanglingReferenceError

    def __init__(
        self,
        column: str,
        values: list[str | int | float],
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        super().__init__(column, impact, threshold, error_cls, **kwargs)
        self.values = values

    @property
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""
        return f"The column '{self.column}' references values that do not exist."

    def __call__(self, frame: Frame) -> Frame:
        """Keep the unknown references and count them."""
        return (
            frame.filter(
                nw.col(self.column).is_in(self.values) == False,
            )
            .group_by(self.column)
            .agg(nw.col(self.column).count().alias(f"{self.column}-count"))
        )
