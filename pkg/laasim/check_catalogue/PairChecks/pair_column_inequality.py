from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import narwhals as nw
from narwhals.typing import Frame

from laasim.base import BaseCheck

if TYPE_CHECKING:
    from laasim.base.results_typedict import KwargsParams
    from laasim.errors import NetworkValidationError


class PairColumnInequality(BaseCheck):
    """Check that two columns never hold the same value on one row.

    Args:
        column (str): First column, also used to report failing items.
        target_column (str): Column that must differ from `column`.
        threshold (float, optional): Tolerated failing share. Defaults to 0.0.
        impact (Literal["low", "medium", "high"], optional): Defaults to "high".

    """

    def __init__(
        self,
        column: str,
        target_column: str,
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        super().__init__(column, impact, threshold, error_cls, **kwargs)
        self.target_column = target_column

    @property
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""
        return f"The columns '{self.column}' and '{self.target_column}' are equal."

    def __call__(self, frame: Frame) -> Frame:
        """Keep the rows where both columns agree."""
        return (
            frame.filter(nw.col(self.column) == nw.col(self.target_column))
            .group_by(self.column)
            .agg(nw.col(self.column).count().alias(f"{self.column}-count"))
        )
