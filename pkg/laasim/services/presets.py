"""Named battery fleets used by the threshold, sizing and placement studies."""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Sequence

from laasim.services.bess import BessUnit, make_unit
from laasim.services.curves import ServiceMode

DR_ZONES: tuple[str, ...] = ("Z1", "Z8", "Z20", "Z25A", "Z27W")
DC_ZONES: tuple[str, ...] = ("Z3", "Z8", "Z9", "Z15", "Z25")


def build_fleet(
    placements: Sequence[tuple[str, ServiceMode]],
    total_mw: float,
) -> tuple[BessUnit, ...]:
    """Spread ``total_mw`` evenly over ``placements``.

    Unit ids are ``<mode>-<zone>-<n>`` where ``n`` counts repeated placements.
    """
    if not placements:
        return ()
    rating = total_mw / len(placements)
    seen: Counter[tuple[str, ServiceMode]] = Counter()
    units = []
    for zone, mode in placements:
        seen[zone, mode] += 1
        unit_id = f"{mode.value}-{zone}-{seen[zone, mode]}"
        units.append(make_unit(unit_id, zone, rating, mode))
    return tuple(units)


def mixed_fleet(total_mw: float) -> tuple[BessUnit, ...]:
    """Equal DR/DC split over the study placements."""
    placements = [(z, ServiceMode.DYNAMIC_REGULATION) for z in DR_ZONES]
    placements += [(z, ServiceMode.DYNAMIC_CONTAINMENT) for z in DC_ZONES]
    return build_fleet(placements, total_mw)


def single_mode_fleet(total_mw: float, mode: ServiceMode) -> tuple[BessUnit, ...]:
    """All ten study placements in one service mode."""
    return build_fleet([(z, mode) for z in (*DR_ZONES, *DC_ZONES)], total_mw)


def colocated_fleet(total_mw: float, zone: str = "Z8") -> tuple[BessUnit, ...]:
    """Five DR and five DC units sharing one zone."""
    placements = [(zone, ServiceMode.DYNAMIC_REGULATION)] * 5
    placements += [(zone, ServiceMode.DYNAMIC_CONTAINMENT)] * 5
    return build_fleet(placements, total_mw)


FLEET_PRESETS: dict[str, Callable[[], tuple[BessUnit, ...]]] = {
    "none": lambda: (),
    "paper-400": lambda: mixed_fleet(400.0),
    "paper-500": lambda: mixed_fleet(500.0),
    "paper-600": lambda: mixed_fleet(600.0),
    "dc-500": lambda: single_mode_fleet(500.0, ServiceMode.DYNAMIC_CONTAINMENT),
    "dr-500": lambda: single_mode_fleet(500.0, ServiceMode.DYNAMIC_REGULATION),
    "colocated-500": lambda: colocated_fleet(500.0),
}

# descriptive aliases of the equal DC/DR study fleets
FLEET_PRESETS.update(
    {f"mixed-{size}": FLEET_PRESETS[f"paper-{size}"] for size in (400, 500, 600)},
)


def fleet_preset(name: str) -> tuple[BessUnit, ...]:
    try:
        return FLEET_PRESETS[name]()
    except KeyError:
        msg = f"Unknown BESS preset '{name}'. Choose from {sorted(FLEET_PRESETS)}."
        raise ValueError(msg) from None
