from __future__ import annotations

from abc import abstractmethod
from datetime import datetime as dt
from datetime import timezone
from typing import Literal, cast

import narwhals as nw
from narwhals import DataFrame
from narwhals.typing import Frame

from laasim.base.results_typedict import (
    CheckTypedDict,
    KwargsParams,
    ResultCheckTypedDict,
)
from laasim.errors import NetworkValidationError
from laasim.util.base_util_functions import (
    build_error_message,
    check__impact,
    check__threshold,
    collect_frame,
    get_count,
    get_items,
    get_length,
    log_exception_summary,
)


class BaseCheck:
    """Base class for checks run against one table of a network model.

    Every check filters the rows that violate it and aggregates them per value of
    ``column`` into a ``<column>-count`` column. The share of failing rows is
    compared against ``threshold``; ``impact`` decides what ``CheckSuite.validate``
    does with a failure.

    Attributes:
        error_cls: Exception raised by ``CheckSuite.validate`` when this check fails
            with high impact. Subclasses and callers may override it per instance.
    """

    error_cls: type[NetworkValidationError] = NetworkValidationError

    def __init__(
        self,
        column: str,
        impact: Literal["low", "medium", "high"] = "high",
        threshold: float = 0.00,
        error_cls: type[NetworkValidationError] | None = None,
        **kwargs: KwargsParams,
    ) -> None:
        check__impact(impact)
        check__threshold(threshold)

        impact_lower = cast("Literal['low', 'medium', 'high']", impact.lower())
        self.impact: Literal["low", "medium", "high"] = impact_lower

        self.column = column
        self.threshold = threshold
        if error_cls is not None:
            self.error_cls = error_cls
        self.__dict__.update(kwargs)

    @property
    @abstractmethod
    def fail_message(self) -> str:
        """Return the fail message, that will be used in the report."""

    @abstractmethod
    def __call__(self, frame: Frame) -> Frame:
        """Return the failing rows aggregated into a ``<column>-count`` column."""

    def __execute_check__(self, frame: Frame, table: str = "frame") -> CheckTypedDict:
        """Execute the check on the provided frame."""
        current_time_str = dt.now(tz=timezone.utc).astimezone().isoformat()
        class_name = self.__class__.__name__

        nw_frame: Frame = nw.from_native(frame)
        collected_frame: DataFrame | None = None
        try:
            collected_frame = collect_frame(self(nw_frame))
            vf_row_number = get_length(collected_frame)
            vf_count_number = get_count(collected_frame, self.column)
            og_frame_rows_number = get_length(nw_frame)
        except Exception as e:
            log_exception_summary(class_name, type(e).__name__, str(e))
            return build_error_message(
                class_name=class_name,
                impact=self.impact,
                table=table,
                column=self.column,
                error_str=str(e),
                current_time_str=current_time_str,
            )

        failed_percentage: float = (
            vf_count_number / og_frame_rows_number if vf_count_number > 0 else 0.00
        )
        threshold_pass: bool = failed_percentage <= self.threshold

        if vf_row_number > 0:
            result = ResultCheckTypedDict(
                status="Success" if threshold_pass else "Fail",
                threshold_pass=threshold_pass,
                message=self.fail_message,
                failing_items=get_items(collected_frame, self.column),
                failed_number=vf_count_number,
                frame_row_number=og_frame_rows_number,
                threshold=self.threshold,
                failed_percentage=failed_percentage,
            )
        else:
            result = ResultCheckTypedDict(
                status="Success",
                threshold_pass=threshold_pass,
                message="All items passed the check.",
                frame_row_number=og_frame_rows_number,
                threshold=self.threshold,
            )

        return CheckTypedDict(
            check=class_name,
            impact=self.impact,
            timestamp=current_time_str,
            table=table,
            column=self.column,
            result=result,
        )
