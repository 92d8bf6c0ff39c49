"""Frequency metrics of a trace: RoCoF, nadir, settling frequency, limit crossings."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from laasim.protection.policy import NOMINAL_FREQ_HZ
from laasim.util.signals import column, signed_peak, trace_frame, windowed_slope

DEFAULT_LIMITS: tuple[float, ...] = (49.8, 49.5, 48.8)
ROCOF_WINDOW_S = 0.5
SETTLING_TAIL_S = 10.0
_TIME_EPS = 1e-9


class Nadir(NamedTuple):
    freq: float
    time: float


class ZonalRocof(NamedTuple):
    rocof: float
    zone: str | None


@dataclass(frozen=True)
class FrequencyMetrics:
    """Metric columns of the threshold, location and placement studies.

    Attributes:
        max_rocof: Signed COI RoCoF of largest magnitude, p.u./s on 50 Hz.
        nadir: Lowest COI frequency in Hz.
        nadir_time: First time the nadir is reached, in s.
        settling_freq: Mean COI frequency over the trace tail, in Hz.
        first_crossing: First time below each limit, ``None`` if never crossed.
        ufls_triggered: Whether load shedding fired.
        max_zonal_rocof: Signed zonal RoCoF of largest magnitude over all zones.
        rocof_zone: Zone where ``max_zonal_rocof`` occurs.
    """

    max_rocof: float
    nadir: float
    nadir_time: float
    settling_freq: float
    first_crossing: dict[float, float | None] = field(default_factory=dict)
    ufls_triggered: bool = False
    max_zonal_rocof: float = 0.0
    rocof_zone: str | None = None

    def breaches(self, limit: float) -> bool:
        return self.nadir < limit

    def as_row(self) -> dict[str, Any]:
        row: dict[str, Any] = {
            "max_rocof_pu_s": round(self.max_rocof, 6),
            "max_zonal_rocof_pu_s": round(self.max_zonal_rocof, 6),
            "rocof_zone": self.rocof_zone,
            "nadir_hz": round(self.nadir, 4),
            "nadir_time_s": round(self.nadir_time, 2),
            "settling_freq_hz": round(self.settling_freq, 4),
            "ufls": self.ufls_triggered,
        }
        for limit, crossed in self.first_crossing.items():
            row[f"cross_{limit:g}_s"] = None if crossed is None else round(crossed, 2)
        return row


def max_rocof(trace: Any, window: float = ROCOF_WINDOW_S) -> float:
    """Largest-magnitude windowed slope of the COI frequency, in p.u./s.

    Raises:
        ValueError: If the trace is shorter than ``window``.

    Examples:
        >>> import numpy as np
        >>> from laasim.analysis import max_rocof
        >>> from laasim.dynamics import Trace
        >>> t = np.arange(0.0, 5.0, 0.01)
        >>> round(max_rocof(Trace.from_coi(t, 50.0 - 0.1 * t)), 6)
        -0.002
    """
    frame = trace_frame(trace)
    _, slope = windowed_slope(column(frame, "time"), column(frame, "coi_freq"), window)
    return signed_peak(slope) / NOMINAL_FREQ_HZ


def max_zonal_rocof(trace: Any, window: float = ROCOF_WINDOW_S) -> ZonalRocof:
    """Largest-magnitude windowed slope over all ``f_<zone>`` columns."""
    frame = trace_frame(trace)
    zone_cols = [c for c in frame.columns if c.startswith("f_")]
    if not zone_cols:
        return ZonalRocof(0.0, None)
    freq = np.column_stack([column(frame, c) for c in zone_cols])
    _, slope = windowed_slope(column(frame, "time"), freq, window)
    flat = int(np.argmax(np.abs(slope)))
    zone = zone_cols[flat % len(zone_cols)].removeprefix("f_")
    return ZonalRocof(signed_peak(slope) / NOMINAL_FREQ_HZ, zone)


def nadir(trace: Any) -> Nadir:
    """Lowest COI frequency and the first time it occurs.

    Raises:
        ValueError: If the trace is empty.
    """
    frame = trace_frame(trace)
    freq = column(frame, "coi_freq")
    if freq.size == 0:
        msg = "Cannot take the nadir of an empty trace."
        raise ValueError(msg)
    idx = int(np.argmin(freq))
    return Nadir(float(freq[idx]), float(column(frame, "time")[idx]))


def settling_frequency(trace: Any, tail: float = SETTLING_TAIL_S) -> float:
    """Mean COI frequency over the last ``tail`` seconds.

    Raises:
        ValueError: If the trace does not span more than ``tail``.
    """
    frame = trace_frame(trace)
    time, freq = column(frame, "time"), column(frame, "coi_freq")
    span = float(time[-1] - time[0]) if time.size else 0.0
    if span <= tail:
        msg = f"Trace span {span:.2f} s must exceed the {tail} s settling tail."
        raise ValueError(msg)
    return float(freq[time >= time[-1] - tail - _TIME_EPS].mean())


def first_crossings(
    trace: Any,
    limits: Sequence[float] = DEFAULT_LIMITS,
) -> dict[float, float | None]:
    """First time the COI frequency is strictly below each limit."""
    frame = trace_frame(trace)
    time, freq = column(frame, "time"), column(frame, "coi_freq")
    crossings: dict[float, float | None] = {}
    for limit in limits:
        hits = np.nonzero(freq < limit)[0]
        crossings[limit] = float(time[hits[0]]) if hits.size else None
    return crossings


def _ufls_triggered(trace: Any) -> bool:
    flag = getattr(trace, "ufls_triggered", None)
    if isinstance(flag, bool):
        return flag
    frame = trace_frame(trace)
    return "shed_mw" in frame.columns and bool((column(frame, "shed_mw") > 0).any())


def compute_metrics(
    trace: Any,
    limits: Sequence[float] = DEFAULT_LIMITS,
    window: float = ROCOF_WINDOW_S,
    tail: float = SETTLING_TAIL_S,
) -> FrequencyMetrics:
    """All metric columns for one trace (a ``Trace`` or a trace frame)."""
    ufls = _ufls_triggered(trace)
    frame = trace_frame(trace)
    low = nadir(frame)
    zonal = max_zonal_rocof(frame, window)
    return FrequencyMetrics(
        max_rocof=max_rocof(frame, window),
        nadir=low.freq,
        nadir_time=low.time,
        settling_freq=settling_frequency(frame, tail),
        first_crossing=first_crossings(frame, limits),
        ufls_triggered=ufls,
        max_zonal_rocof=zonal.rocof,
        rocof_zone=zonal.zone,
    )
