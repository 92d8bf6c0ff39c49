from __future__ import annotations

import importlib
import sys
from collections.abc import Callable
from pathlib import Path
from typing import TYPE_CHECKING, Literal, cast

import narwhals as nw
from loguru import logger
from narwhals.typing import Frame, IntoFrame

from laasim.base.results_typedict import (
    CheckTypedDict,
    ResultCheckTypedDict,
    SummaryTypedDict,
    TabulateKwargs,
)
from laasim.errors import NetworkValidationError

if sys.version_info < (3, 11):
    from typing_extensions import Unpack
else:
    from typing import Unpack

if TYPE_CHECKING:
    from laasim.base import BaseCheck


class CheckSuite:
    """Chainable runner for the check catalogue over one table.

    Every sub-directory of ``check_catalogue`` becomes an attribute group, so checks
    read as ``CheckSuite(frame).ValueChecks.ColumnValuesToBeBetween(...)``.
    """

    def __init__(self, frame: IntoFrame, table: str = "frame") -> None:
        self.summary = SummaryTypedDict(passed=None, checks=[], failed_checks=[])
        self.results: dict[str, SummaryTypedDict | CheckTypedDict] = {
            "Summary": self.summary,
        }
        self.table = table
        self._error_classes: dict[str, type[NetworkValidationError]] = {}

        self.frame: Frame = nw.from_native(frame)

        self.__generate_check_attributes__()

    def __repr__(self) -> str:
        from laasim.util.base_util_functions import get_length  # noqa: PLC0415

        num_rows = get_length(self.frame)
        return f"CheckSuite(table={self.table!r}, rows={num_rows}, checks={len(self)})"

    def __str__(self) -> str:
        passed = self.summary["passed"]
        return f"CheckSuite[{self.table}]: {len(self)} check(s), passed={passed}"

    def __len__(self) -> int:
        return len(self.summary["checks"])

    def __generate_check_attributes__(self) -> None:
        package_dir = Path(__file__).parent
        catalogue_dir = package_dir / "check_catalogue"

        for subdir in sorted(d for d in catalogue_dir.iterdir() if d.is_dir()):
            if subdir.name.startswith("__"):
                continue
            group = type(subdir.name, (), {"__doc__": f"Checks for {subdir.name}"})

            for py_file in sorted(subdir.glob("*.py")):
                if py_file.name == "__init__.py":
                    continue
                module_relative_path = py_file.relative_to(package_dir.parent)
                module_name = ".".join(module_relative_path.with_suffix("").parts)

                try:
                    module = importlib.import_module(module_name)
                except ImportError:
                    logger.warning(f"Could not load module {module_name} from {py_file}")
                    continue

                for key, obj in module.__dict__.items():
                    if py_file.stem.replace("_", "").lower() == key.lower():
                        setattr(group, key, self.__make_check_method__(obj))
                        break

            setattr(self, subdir.name, group())

    def __make_check_method__(self, class_obj: type) -> Callable[..., CheckSuite]:
        def check_method(*args, **kwargs) -> CheckSuite:
            # bound to the group instance, which arrives first
            return self.add_check(class_obj(*args[1:], **kwargs))

        check_method.__name__ = class_obj.__name__
        check_method.__doc__ = class_obj.__doc__
        return check_method

    def __parse_results__(self, name: str, result_dict: CheckTypedDict) -> None:
        status = result_dict["result"]["status"]
        if status == "Fail":
            self.summary["passed"] = False
            self.summary["failed_checks"].append(name)
        elif self.summary["passed"] is None:
            self.summary["passed"] = True

        self.summary["checks"].append(name)
        self.results[name] = result_dict

    def add_check(self, check: BaseCheck) -> CheckSuite:
        """Run a check (catalogue or custom) against the table and store its result.

        Args:
            check (BaseCheck): Check instance to execute.

        Examples:
            >>> import polars as pl
            >>> from laasim.check import CheckSuite
            >>> from laasim.check_catalogue.UniqueChecks import ColumnValuesToBeUnique
            >>>
            >>> suite = CheckSuite(pl.DataFrame({"id": ["Z1", "Z1"]}), table="zones")
            >>> suite = suite.add_check(ColumnValuesToBeUnique("id"))
            >>> suite.results["ColumnValuesToBeUnique_id"]["result"]["status"]
            'Fail'

        """
        from laasim.base.base_check import BaseCheck  # noqa: PLC0415

        if not isinstance(check, BaseCheck):
            output_name = type(check).__name__
            result = CheckTypedDict(
                check=output_name,
                impact="high",
                timestamp="N/A",
                table=self.table,
                column="N/A",
                result=ResultCheckTypedDict(
                    status="Fail",
                    message=f"{output_name} is not a valid check.",
                ),
            )
            self._error_classes[output_name] = NetworkValidationError
            self.__parse_results__(output_name, result)
            return self

        name = f"{check.__class__.__name__}_{check.column}"
        # the same check may run twice on one column with different bounds
        if name in self.results:
            name = f"{name}_{len(self)}"
        self._error_classes[name] = check.error_cls
        self.__parse_results__(name, check.__execute_check__(self.frame, self.table))
        return self

    def failed(self, impact: Literal["low", "medium", "high"] | None = None) -> list[str]:
        """Names of the failed checks, optionally restricted to one impact level."""
        names = []
        for name in self.summary["failed_checks"]:
            result = cast("CheckTypedDict", self.results[name])
            if impact is None or result["impact"] == impact:
                names.append(name)
        return names

    def display_summary(
        self,
        information: Literal["short", "full"] = "short",
        **kwargs: Unpack[TabulateKwargs],
    ) -> None:
        """Print the check results as a table.

        Args:
            information: "short" shows the key columns, "full" every result field.
            **kwargs: Forwarded to `tabulate.tabulate()`; `tablefmt` defaults to
                "simple_grid" and `maxcolwidths` to 24.

        Raises:
            ValueError: If no checks have been added.
        """
        print(self.summary_table(information, **kwargs))

    def summary_table(
        self,
        information: Literal["short", "full"] = "short",
        **kwargs: Unpack[TabulateKwargs],
    ) -> str:
        from tabulate import tabulate  # noqa: PLC0415

        if len(self) == 0:
            msg = "No checks were added."
            raise ValueError(msg)

        table = []
        for key in self.summary["checks"]:
            check = cast("CheckTypedDict", self.results[key])
            row: dict[str, object]
            if information == "short":
                row = {
                    "table": check["table"],
                    "impact": check["impact"],
                    "status": check["result"]["status"],
                    "check": check["check"],
                    "column": check["column"],
                    "failed_number": check["result"].get("failed_number"),
                    "failing_items": check["result"].get("failing_items"),
                }
            else:
                result_keys = list(ResultCheckTypedDict.__annotations__.keys())
                row = {
                    "check": key,
                    **{k: check["result"].get(k, "") for k in result_keys},
                }
            table.append(row)

        kwargs.setdefault("tablefmt", "simple_grid")
        kwargs.setdefault("maxcolwidths", 24)
        return tabulate(table, headers="keys", **kwargs)

    def validate(self) -> None:
        """Log every result by impact and raise on high-impact failures.

        High-impact failures are logged at CRITICAL, medium at ERROR, low at WARNING,
        passes at DEBUG. The raised exception is the ``error_cls`` of the first failed
        high-impact check; its message lists every failed high-impact check with its
        failing items.

        Raises:
            ValueError: If no checks were added.
            NetworkValidationError: If any high-impact check failed.
        """
        if len(self) == 0:
            msg = "No checks were added."
            raise ValueError(msg)

        high_failures: list[str] = []
        for name in self.summary["checks"]:
            check = cast("CheckTypedDict", self.results[name])
            result = check["result"]
            if result["status"] == "Success":
                logger.debug(f"Passed check: {self.table}.{name}")
                continue

            items = result.get("failing_items")
            detail = result["message"]
            if items:
                detail = f"{detail} Failing items: {items}"
            warning_msg = f"Failed check: {self.table}.{name} - {detail}"
            if check["impact"] == "high":
                high_failures.append(f"{name} ({detail})")
                logger.critical(warning_msg)
            elif check["impact"] == "medium":
                logger.error(warning_msg)
            else:
                logger.warning(warning_msg)

        if high_failures:
            first = self.failed("high")[0]
            error_cls = self._error_classes.get(first, NetworkValidationError)
            msg = f"Failed check(s) on '{self.table}': " + "; ".join(high_failures)
            raise error_cls(msg)
