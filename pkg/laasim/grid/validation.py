"""Network invariants expressed as check suites over the model tables."""

from __future__ import annotations

from typing import TYPE_CHECKING

from loguru import logger

from laasim.check import CheckSuite
from laasim.errors import (
    CapacityShortfallError,
    DisconnectedNetworkError,
    ZeroInertiaZoneError,
)
from laasim.grid.model import MIN_KINETIC_ENERGY_GJ

if TYPE_CHECKING:
    import polars as pl

    from laasim.grid.model import NetworkModel


def _bess_suite(frame: pl.DataFrame, zone_ids: list[str]) -> CheckSuite:
    return (
        CheckSuite(frame, table="bess")
        .ReferenceChecks.ColumnValuesToBeInList("zone", zone_ids)
        .UniqueChecks.ColumnValuesToBeUnique("id")
        .ValueChecks.ColumnValuesToBeBetween("rating_mw", min_value=0, closed="right")
        .ValueChecks.ColumnValuesToBeBetween("deadband_hz", min_value=0)
        .PairChecks.PairColumnOrdering("deadband_hz", "full_deviation_hz")
        .ValueChecks.ColumnValuesToBeBetween("activation_delay_s", min_value=0)
        .PairChecks.PairColumnOrdering("activation_delay_s", "full_delivery_s")
        .ValueChecks.ColumnValuesToBeBetween("energy_capacity_mwh", min_value=0)
    )


def build_check_suites(model: NetworkModel) -> list[CheckSuite]:
    """Run every network check and return the suites in validation order.

    Reference checks come first so a dangling zone id is reported as such rather
    than as a zone without inertia.
    """
    frames = model.to_frames()
    zone_ids = list(model.zone_ids)

    lines = (
        CheckSuite(frames["lines"], table="lines")
        .ReferenceChecks.ColumnValuesToBeInList("from", zone_ids)
        .ReferenceChecks.ColumnValuesToBeInList("to", zone_ids)
        .PairChecks.PairColumnInequality("from", "to")
        .ValueChecks.ColumnValuesToBeBetween("susceptance", min_value=0, closed="right")
    )
    generators = (
        CheckSuite(frames["generators"], table="generators")
        .ReferenceChecks.ColumnValuesToBeInList("zone", zone_ids)
        .UniqueChecks.ColumnValuesToBeUnique("id")
        .ValueChecks.ColumnValuesToBeBetween("rating", min_value=0, closed="right")
        .ValueChecks.ColumnValuesToBeBetween("inertia_h", min_value=0, closed="right")
        .ValueChecks.ColumnValuesToBeBetween("droop", 0, 1, closed="right")
        .ValueChecks.ColumnValuesToBeBetween("governor_tc", min_value=0, closed="right")
        .ValueChecks.ColumnValuesToBeBetween("headroom", min_value=0)
        .ValueChecks.ColumnValuesToBeBetween("damping", min_value=0)
    )
    interconnectors = CheckSuite(
        frames["interconnectors"],
        table="interconnectors",
    ).ReferenceChecks.ColumnValuesToBeInList("zone", zone_ids)
    bess = _bess_suite(frames["bess"], zone_ids)
    zones = (
        CheckSuite(frames["zones"], table="zones")
        .UniqueChecks.ColumnValuesToBeUnique("id")
        .ValueChecks.ColumnValuesToBeBetween("demand", min_value=0)
        .ValueChecks.ColumnValuesToBeBetween("sheddable_fraction", 0, 1)
        .ValueChecks.ColumnValuesToBeBetween(
            "inertia_mvas",
            min_value=0,
            closed="right",
            error_cls=ZeroInertiaZoneError,
        )
    )
    system = (
        CheckSuite(frames["system"], table="system")
        .ValueChecks.ColumnValuesToBeBetween(
            "components",
            1,
            1,
            error_cls=DisconnectedNetworkError,
        )
        .ValueChecks.ColumnValuesToBeBetween(
            "capacity_margin_mw",
            min_value=0,
            error_cls=CapacityShortfallError,
        )
        .ValueChecks.ColumnValuesToBeBetween(
            "kinetic_energy_gj",
            min_value=MIN_KINETIC_ENERGY_GJ,
            impact="low",
        )
    )
    return [lines, generators, interconnectors, bess, zones, system]


def validate_network(model: NetworkModel) -> NetworkModel:
    """Raise the matching ``NetworkValidationError`` subclass if the model is invalid.

    Returns:
        NetworkModel: The same model, for chaining.
    """
    for suite in build_check_suites(model):
        suite.validate()
    logger.debug(
        f"Network '{model.name}' valid: {model.n_zones} zones, {len(model.lines)} lines, "
        f"{len(model.generators)} generators, {len(model.bess_fleet)} BESS units",
    )
    return model


def validate_fleet(model: NetworkModel) -> None:
    """Check only the BESS table, used when a fleet is swapped on a valid model."""
    _bess_suite(model.to_frames()["bess"], list(model.zone_ids)).validate()
