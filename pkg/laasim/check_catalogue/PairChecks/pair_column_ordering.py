from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import narwhals as nw
from narwhals.typing import Frame

from laasim.base import BaseCheck

if TYPE_CHECKING:
    from laasim.base.results_typedict import KwargsParams
    from laasim.errors import NetworkValidationError


class PairColumnOrdering(BaseCheck):
    """Check that `column` stays below `greater_column` on every row.

    Args:
        column (str): Column expected to hold the smaller value.
        greater_column (str): Column expected to hold the larger value.
        strict (bool): Require strict inequality. Defaults to True.
        threshold (float, optional): Tolerated failing share. Defaults to 0.0.
        impact (Literal["low", "medium", "high"], optional): Defaults to "high".

    """

    def __init__(
        self,
        column: str,
        greater_column: str,
        *,
        strict: bool = True,
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        super().__init__(column, impact, threshold, error_cls, **kwargs)
        self.greater_column = greater_column
        self.strict = strict

    @property
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""
        op = "<" if self.strict else "<="
        return f"Expected '{self.column}' {op} '{self.greater_column}' on every row."

    def __call__(self, frame: Frame) -> Frame:
        """Keep the rows breaking the ordering."""
        lhs, rhs = nw.col(self.column), nw.col(self.greater_column)
        ordered = lhs < rhs if self.strict else lhs <= rhs
        return (
            frame.filter(ordered == False)
            .group_by(self.column)
            .agg(nw.col(self.column).count().alias(f"{self.column}-count"))
        )
