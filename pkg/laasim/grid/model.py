"""Static network description of a multi-zone frequency model."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

import networkx as nx
import numpy as np
import polars as pl

from laasim.services.bess import BessUnit

NOMINAL_FREQ_HZ = 50.0
BASE_MVA = 100.0
# Operator floor for stored rotational energy.
MIN_KINETIC_ENERGY_GJ = 96.0
GENERATOR_PARAMETERS = (
    "rating",
    "inertia_h",
    "droop",
    "governor_tc",
    "headroom",
    "damping",
)


@dataclass(frozen=True)
class Zone:
    id: str
    demand: float
    sheddable_fraction: float = 0.05


@dataclass(frozen=True)
class Line:
    from_zone: str
    to_zone: str
    susceptance: float
    rating: float = 0.0


@dataclass(frozen=True)
class SyncGenerator:
    id: str
    zone: str
    rating: float
    inertia_h: float = 5.0
    droop: float = 0.05
    governor_tc: float = 8.0
    headroom: float = 0.0
    damping: float = 1.0


@dataclass(frozen=True)
class Interconnector:
    zone: str
    injection: float


@dataclass(frozen=True)
class NetworkModel:
    """Immutable zonal model; safe to share between concurrent runs."""

    zones: tuple[Zone, ...]
    lines: tuple[Line, ...]
    generators: tuple[SyncGenerator, ...]
    interconnectors: tuple[Interconnector, ...] = ()
    bess_fleet: tuple[BessUnit, ...] = ()
    base_mva: float = BASE_MVA
    nominal_freq: float = NOMINAL_FREQ_HZ
    name: str = field(default="network", compare=False)

    @cached_property
    def zone_ids(self) -> tuple[str, ...]:
        return tuple(z.id for z in self.zones)

    @cached_property
    def zone_index(self) -> dict[str, int]:
        return {zone_id: i for i, zone_id in enumerate(self.zone_ids)}

    @property
    def n_zones(self) -> int:
        return len(self.zones)

    @cached_property
    def demand(self) -> np.ndarray:
        return np.array([z.demand for z in self.zones], dtype=float)

    @property
    def total_demand(self) -> float:
        return float(self.demand.sum())

    @property
    def generation_capacity(self) -> float:
        return float(sum(g.rating for g in self.generators))

    @property
    def net_import(self) -> float:
        return float(sum(ic.injection for ic in self.interconnectors))

    @property
    def capacity_margin(self) -> float:
        """Generation capacity plus imports minus demand, in MW."""
        return self.generation_capacity + self.net_import - self.total_demand

    @cached_property
    def zone_inertia(self) -> np.ndarray:
        """Aggregate H·S per zone in MVA·s; generators on unknown zones are skipped."""
        hs = np.zeros(self.n_zones)
        for gen in self.generators:
            idx = self.zone_index.get(gen.zone)
            if idx is not None:
                hs[idx] += gen.inertia_h * gen.rating
        return hs

    @property
    def kinetic_energy_gj(self) -> float:
        return float(sum(g.inertia_h * g.rating for g in self.generators) / 1000.0)

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.zone_ids)
        for line in self.lines:
            if line.from_zone in self.zone_index and line.to_zone in self.zone_index:
                graph.add_edge(line.from_zone, line.to_zone)
        return graph

    def with_fleet(self, fleet: tuple[BessUnit, ...]) -> NetworkModel:
        """Copy of the model with another BESS fleet; zone references are re-checked."""
        from laasim.grid.validation import validate_fleet  # noqa: PLC0415

        model = replace(self, bess_fleet=tuple(fleet))
        validate_fleet(model)
        return model

    def to_frames(self) -> dict[str, pl.DataFrame]:
        """Model tables as polars frames, the input of the validation suite."""
        zones = pl.DataFrame(
            {
                "id": [z.id for z in self.zones],
                "demand": [z.demand for z in self.zones],
                "sheddable_fraction": [z.sheddable_fraction for z in self.zones],
                "inertia_mvas": self.zone_inertia.tolist(),
            },
            schema={
                "id": pl.String,
                "demand": pl.Float64,
                "sheddable_fraction": pl.Float64,
                "inertia_mvas": pl.Float64,
            },
        )
        lines = pl.DataFrame(
            {
                "from": [ln.from_zone for ln in self.lines],
                "to": [ln.to_zone for ln in self.lines],
                "susceptance": [ln.susceptance for ln in self.lines],
                "rating": [ln.rating for ln in self.lines],
            },
            schema={
                "from": pl.String,
                "to": pl.String,
                "susceptance": pl.Float64,
                "rating": pl.Float64,
            },
        )
        generators = pl.DataFrame(
            {
                "id": [g.id for g in self.generators],
                "zone": [g.zone for g in self.generators],
                **{
                    key: [getattr(g, key) for g in self.generators]
                    for key in GENERATOR_PARAMETERS
                },
            },
            schema={
                "id": pl.String,
                "zone": pl.String,
                **dict.fromkeys(GENERATOR_PARAMETERS, pl.Float64),
            },
        )
        interconnectors = pl.DataFrame(
            {
                "zone": [ic.zone for ic in self.interconnectors],
                "injection": [ic.injection for ic in self.interconnectors],
            },
            schema={"zone": pl.String, "injection": pl.Float64},
        )
        bess = pl.DataFrame(
            {
                "id": [u.id for u in self.bess_fleet],
                "zone": [u.zone for u in self.bess_fleet],
                "rating_mw": [u.rating for u in self.bess_fleet],
                "mode": [u.mode.value for u in self.bess_fleet],
                "deadband_hz": [u.curve.deadband for u in self.bess_fleet],
                "full_deviation_hz": [u.curve.full_deviation for u in self.bess_fleet],
                "activation_delay_s": [u.activation_delay for u in self.bess_fleet],
                "full_delivery_s": [u.full_delivery_time for u in self.bess_fleet],
                "energy_capacity_mwh": [u.energy_capacity for u in self.bess_fleet],
            },
            schema={
                "id": pl.String,
                "zone": pl.String,
                "rating_mw": pl.Float64,
                "mode": pl.String,
                **dict.fromkeys(
                    (
                        "deadband_hz",
                        "full_deviation_hz",
                        "activation_delay_s",
                        "full_delivery_s",
                        "energy_capacity_mwh",
                    ),
                    pl.Float64,
                ),
            },
        )
        system = pl.DataFrame(
            {
                "name": [self.name],
                "components": [nx.number_connected_components(self.graph)],
                "capacity_margin_mw": [self.capacity_margin],
                "kinetic_energy_gj": [self.kinetic_energy_gj],
            },
            schema={
                "name": pl.String,
                "components": pl.Int64,
                "capacity_margin_mw": pl.Float64,
                "kinetic_energy_gj": pl.Float64,
            },
        )
        return {
            "zones": zones,
            "lines": lines,
            "generators": generators,
            "interconnectors": interconnectors,
            "bess": bess,
            "system": system,
        }


@dataclass(frozen=True, eq=False)
class EquilibriumDispatch:
    """Pre-disturbance steady state at nominal frequency.

    Attributes:
        setpoints: Mechanical power per generator in MW.
        angles: Zone angles in rad, zone 0 as reference.
        injection: Net zone injection in MW (generation + imports - demand).
        residual: Largest per-zone power balance error in p.u.
    """

    setpoints: np.ndarray
    angles: np.ndarray
    injection: np.ndarray
    residual: float
