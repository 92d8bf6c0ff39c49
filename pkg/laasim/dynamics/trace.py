"""Sampled output of a simulation run."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np
import polars as pl


class TraceEvent(NamedTuple):
    time: float
    kind: str
    payload: dict[str, Any]


@dataclass(frozen=True, eq=False)
class Trace:
    """Samples of one run; frequencies in Hz, powers in MW.

    Attributes:
        time: Sample times, shape ``(m,)``.
        coi_freq: Center-of-inertia frequency, shape ``(m,)``.
        zone_freq: Zonal frequencies, shape ``(m, n_zones)``.
        zone_load: Zonal load including attack and shedding, shape ``(m, n_zones)``.
        bess_power: Delivered power per unit, shape ``(m, n_units)``.
        shed_mw: Cumulative shed load, shape ``(m,)``.
        attack_mw: System-wide attack load, shape ``(m,)``.
        events: Attack steps and relay trips in time order.
    """

    time: np.ndarray
    coi_freq: np.ndarray
    zone_freq: np.ndarray
    zone_load: np.ndarray
    bess_power: np.ndarray
    shed_mw: np.ndarray
    attack_mw: np.ndarray
    zone_ids: tuple[str, ...]
    bess_ids: tuple[str, ...] = ()
    events: tuple[TraceEvent, ...] = field(default_factory=tuple)
    completed: bool = True

    def __len__(self) -> int:
        return int(self.time.size)

    @property
    def span(self) -> float:
        return float(self.time[-1] - self.time[0]) if len(self) else 0.0

    @property
    def ufls_triggered(self) -> bool:
        return any(e.kind == "ufls_trip" for e in self.events)

    @classmethod
    def from_coi(
        cls,
        time: np.ndarray | list[float],
        coi_freq: np.ndarray | list[float],
        zone_id: str = "Z1",
    ) -> Trace:
        """Single-zone trace from a COI frequency series, handy for metric checks."""
        t = np.asarray(time, dtype=float)
        f = np.asarray(coi_freq, dtype=float)
        return cls(
            time=t,
            coi_freq=f,
            zone_freq=f[:, None],
            zone_load=np.zeros((t.size, 1)),
            bess_power=np.zeros((t.size, 0)),
            shed_mw=np.zeros(t.size),
            attack_mw=np.zeros(t.size),
            zone_ids=(zone_id,),
        )

    def to_frame(self, *, include_load: bool = False) -> pl.DataFrame:
        """Columns ``time, coi_freq, shed_mw, f_<zone>..., p_bess_<unit>...``."""
        data: dict[str, np.ndarray] = {
            "time": self.time,
            "coi_freq": self.coi_freq,
            "shed_mw": self.shed_mw,
        }
        for i, zone_id in enumerate(self.zone_ids):
            data[f"f_{zone_id}"] = self.zone_freq[:, i]
        for j, unit_id in enumerate(self.bess_ids):
            data[f"p_bess_{unit_id}"] = self.bess_power[:, j]
        if include_load:
            data["attack_mw"] = self.attack_mw
            for i, zone_id in enumerate(self.zone_ids):
                data[f"load_{zone_id}"] = self.zone_load[:, i]
        columns = {k: pl.Series(k, v, dtype=pl.Float64) for k, v in data.items()}
        return pl.DataFrame(columns)

    def events_document(self) -> list[dict[str, Any]]:
        return [{"time": e.time, "kind": e.kind, **e.payload} for e in self.events]
