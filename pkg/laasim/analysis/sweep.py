"""Study sweeps: threshold, location, placement and static-vs-dynamic tables."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

from loguru import logger
from tabulate import tabulate

from laasim.analysis.metrics import DEFAULT_LIMITS, FrequencyMetrics, compute_metrics
from laasim.analysis.threshold import (
    DEFAULT_TOL_MW,
    ThresholdResult,
    attack_for,
    find_min_laa,
)
from laasim.dynamics.config import SimulationConfig
from laasim.dynamics.engine import run
from laasim.errors import LaasimError
from laasim.services.presets import fleet_preset

if TYPE_CHECKING:
    from laasim.grid.model import NetworkModel
    from laasim.protection.policy import ProtectionPolicy

LOCATION_STUDY_ZONES: tuple[str, ...] = ("Z8", "Z1", "Z15", "Z20", "Z27W")
LOCATION_STUDY_MW = 880.68
DEFAULT_BRACKET: tuple[float, float] = (0.0, 6000.0)


@dataclass(frozen=True)
class SweepCell:
    """One row of a study.

    ``kind="threshold"`` searches the minimum attack for every limit;
    ``kind="metrics"`` simulates a fixed ``magnitude``.
    """

    label: str
    kind: Literal["threshold", "metrics"]
    zone: str = "Z8"
    bess: str = "none"
    magnitude: float = 0.0
    limits: tuple[float, ...] = DEFAULT_LIMITS
    dynamic: bool = False
    bracket: tuple[float, float] = DEFAULT_BRACKET


@dataclass(frozen=True)
class SweepRow:
    cell: SweepCell
    metrics: FrequencyMetrics | None = None
    thresholds: dict[float, ThresholdResult] = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def as_rows(self) -> list[dict[str, Any]]:
        """Flat table rows: one per limit for thresholds, one for metrics."""
        head = {
            "label": self.cell.label,
            "bess": self.cell.bess,
            "zone": self.cell.zone,
            "attack": "dynamic" if self.cell.dynamic else "static",
        }
        if self.error is not None:
            return [{**head, "error": self.error}]
        if self.cell.kind == "threshold":
            return [
                {**head, **result.as_row()} for result in self.thresholds.values()
            ]
        assert self.metrics is not None
        return [{**head, "laa_mw": self.cell.magnitude, **self.metrics.as_row()}]


def run_cell(
    model: NetworkModel,
    cell: SweepCell,
    config: SimulationConfig | None = None,
    protection: ProtectionPolicy | None = None,
    tol: float = DEFAULT_TOL_MW,
) -> SweepRow:
    """Evaluate one cell; library errors are kept on the row instead of raised."""
    config = config or SimulationConfig()
    try:
        cell_model = model.with_fleet(fleet_preset(cell.bess))
        if cell.kind == "metrics":
            scenario = attack_for(cell.zone, cell.magnitude, dynamic=cell.dynamic)
            trace = run(cell_model, scenario, config, protection)
            return SweepRow(cell, metrics=compute_metrics(trace, cell.limits))
        thresholds = {
            limit: find_min_laa(
                cell_model,
                cell.zone,
                limit,
                cell.bracket,
                tol,
                config,
                protection,
                dynamic=cell.dynamic,
            )
            for limit in cell.limits
        }
        return SweepRow(cell, thresholds=thresholds)
    except (LaasimError, ValueError) as e:
        logger.error(f"Sweep cell '{cell.label}' failed: {e}")
        return SweepRow(cell, error=f"{type(e).__name__}: {e}")


def sweep_tables(
    model: NetworkModel,
    cells: Sequence[SweepCell],
    config: SimulationConfig | None = None,
    protection: ProtectionPolicy | None = None,
    *,
    tol: float = DEFAULT_TOL_MW,
    max_workers: int = 1,
) -> list[SweepRow]:
    """Evaluate every cell, in parallel processes when ``max_workers > 1``.

    Rows come back in the order of ``cells`` whatever the completion order; a
    failing cell yields a row with ``error`` set and the sweep carries on.
    """
    if not cells:
        return []
    logger.info(f"Sweep of {len(cells)} cell(s) on '{model.name}'")
    if max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            futures = [
                pool.submit(run_cell, model, cell, config, protection, tol)
                for cell in cells
            ]
            return [f.result() for f in futures]
    return [run_cell(model, cell, config, protection, tol) for cell in cells]


def threshold_cells(zone: str = "Z8") -> list[SweepCell]:
    """Thresholds without BESS, with single-mode fleets and with the mixed fleet."""
    return [
        SweepCell(f"threshold-{bess}", "threshold", zone=zone, bess=bess)
        for bess in ("none", "dc-500", "dr-500", "paper-500")
    ]


def sizing_cells(zone: str = "Z8") -> list[SweepCell]:
    """Thresholds for growing mixed fleets."""
    return [
        SweepCell(f"sizing-{bess}", "threshold", zone=zone, bess=bess)
        for bess in ("paper-400", "paper-500", "paper-600")
    ]


def location_cells(
    magnitude: float = LOCATION_STUDY_MW,
    zones: Sequence[str] = LOCATION_STUDY_ZONES,
    bess: str = "paper-500",
) -> list[SweepCell]:
    """Same attack moved across zones."""
    return [
        SweepCell(
            f"location-{zone}", "metrics", zone=zone, bess=bess, magnitude=magnitude
        )
        for zone in zones
    ]


def placement_cells(
    magnitude: float = LOCATION_STUDY_MW,
    zone: str = "Z8",
) -> list[SweepCell]:
    """Distributed fleet against the same fleet co-located with the attack."""
    return [
        SweepCell(
            f"placement-{bess}", "metrics", zone=zone, bess=bess, magnitude=magnitude
        )
        for bess in ("paper-500", "colocated-500")
    ]


def static_dynamic_cells(
    magnitude: float,
    zone: str = "Z8",
    bess: str = "paper-500",
) -> list[SweepCell]:
    """One attack applied at once and in three equal steps."""
    return [
        SweepCell(
            f"{'dynamic' if dynamic else 'static'}-{magnitude:g}",
            "metrics",
            zone=zone,
            bess=bess,
            magnitude=magnitude,
            dynamic=dynamic,
        )
        for dynamic in (False, True)
    ]


STUDIES = {
    "threshold": threshold_cells,
    "sizing": sizing_cells,
    "location": location_cells,
    "placement": placement_cells,
}


def render_table(rows: Sequence[SweepRow], tablefmt: str = "simple_grid") -> str:
    """Aligned plain-text table of every row."""
    flat = [r for row in rows for r in row.as_rows()]
    if not flat:
        return "(no rows)"
    headers = list(dict.fromkeys(k for r in flat for k in r))
    return tabulate(
        [[r.get(h, "") for h in headers] for r in flat],
        headers=headers,
        tablefmt=tablefmt,
    )
