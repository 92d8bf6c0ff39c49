from __future__ import annotations

from typing import TYPE_CHECKING, Literal

import narwhals as nw
from narwhals.typing import Frame

from laasim.base import BaseCheck
from laasim.util import Closed, min_max_arg_check, min_max_filter

if TYPE_CHECKING:
    from laasim.base.results_typedict import KwargsParams
    from laasim.errors import NetworkValidationError


class ColumnValuesToBeBetween(BaseCheck):
    """Check if the values in a column are between a range.

    If only one of `min_value` or `max_value` is given the check is one-sided.

    Args:
        column (str): Column to check.
        min_value (float | None): Lower bound.
        max_value (float | None): Upper bound.
        closed (Closed): Which bounds are inclusive. Defaults to "both".
        threshold (float, optional): Tolerated failing share. Defaults to 0.0.
        impact (Literal["low", "medium", "high"], optional): Defaults to "high".

    Examples:
        >>> import polars as pl
        >>> from laasim.check import CheckSuite
        >>>
        >>> zones = pl.DataFrame({"id": ["Z1", "Z2"], "demand": [120.0, 80.0]})
        >>> suite = CheckSuite(zones, table="zones").ValueChecks.ColumnValuesToBeBetween(
        ...     column="demand", min_value=0
        ... )
        >>> suite.results["ColumnValuesToBeBetween_demand"]["result"]["status"]
        'Success'

    """

    def __init__(
        self,
        column: str,
        min_value: float | None = None,
        max_value: float | None = None,
        closed: Closed = "both",
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        min_max_arg_check(min_value, max_value)

        super().__init__(column, impact, threshold, error_cls, **kwargs)
        self.min_value = min_value
        self.max_value = max_value
        self.closed: Closed = closed

    @property
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""
        left = "[" if self.closed in ("both", "left") else "("
        right = "]" if self.closed in ("both", "right") else ")"
        return (
            f"The column '{self.column}' has values outside "
            f"{left}{self.min_value}, {self.max_value}{right}."
        )

    def __call__(self, frame: Frame) -> Frame:
        """Keep the out-of-range values and count them."""
        return (
            min_max_filter(
                frame,
                self.column,
                self.min_value,
                self.max_value,
                self.closed,
            )
            .group_by(self.column)
            .agg(
                nw.col(self.column).count().alias(f"{self.column}-count"),
            )
        )
