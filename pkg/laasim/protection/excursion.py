"""Classification of a frequency trace against the operating bands."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from laasim.protection.policy import NOMINAL_FREQ_HZ, ProtectionPolicy
from laasim.util.signals import column, longest_run, trace_frame, windowed_slope


class Band(str, Enum):
    """Most severe band breached, ordered by severity."""

    NONE = "none"
    NORMAL = "normal"
    STATUTORY = "statutory"
    UFLS = "ufls"

    @property
    def severity(self) -> int:
        return list(Band).index(self)


@dataclass(frozen=True)
class ViolationReport:
    band: Band
    first_crossing: dict[Band, float] = field(default_factory=dict)
    rocof_violation: bool = False
    rocof_violations: dict[float, bool] = field(default_factory=dict)
    min_freq: float = NOMINAL_FREQ_HZ
    max_freq: float = NOMINAL_FREQ_HZ

    @property
    def breached(self) -> bool:
        return self.band is not Band.NONE


def _first_time(mask: np.ndarray, time: np.ndarray) -> float | None:
    hits = np.nonzero(mask)[0]
    return float(time[hits[0]]) if hits.size else None


def classify_excursion(
    trace: Any,
    policy: ProtectionPolicy | None = None,
) -> ViolationReport:
    """Report the worst band breached by the COI frequency and any sustained RoCoF.

    Args:
        trace: A ``Trace`` or any narwhals-compatible frame with ``time`` and
            ``coi_freq`` columns.
        policy: Band and RoCoF settings; defaults to ``ProtectionPolicy()``.

    Raises:
        ValueError: If the trace has no samples.

    Examples:
        >>> import polars as pl
        >>> from laasim.protection import classify_excursion
        >>> frame = pl.DataFrame(
        ...     {"time": [0.0, 1.0, 2.0], "coi_freq": [50.0, 49.85, 49.9]}
        ... )
        >>> classify_excursion(frame).band.value
        'none'
    """
    policy = policy or ProtectionPolicy()
    frame = trace_frame(trace)
    time, freq = column(frame, "time"), column(frame, "coi_freq")
    if time.size == 0:
        msg = "Cannot classify an empty trace."
        raise ValueError(msg)

    f0 = NOMINAL_FREQ_HZ
    masks = {
        Band.NORMAL: np.abs(freq - f0) > policy.normal_band,
        Band.STATUTORY: np.abs(freq - f0) > policy.statutory_band,
        Band.UFLS: freq <= policy.ufls_threshold,
    }
    first_crossing: dict[Band, float] = {}
    for band, mask in masks.items():
        crossed = _first_time(mask, time)
        if crossed is not None:
            first_crossing[band] = crossed
    band = max(first_crossing, key=lambda b: b.severity, default=Band.NONE)

    rocof_violations = dict.fromkeys(policy.rocof_limits, False)
    if time[-1] - time[0] >= policy.rocof_window:
        starts, slope = windowed_slope(time, freq, policy.rocof_window)
        rocof = np.abs(slope) / f0
        for limit in policy.rocof_limits:
            span = longest_run(rocof > limit, starts)
            rocof_violations[limit] = span > policy.rocof_window

    return ViolationReport(
        band=band,
        first_crossing=first_crossing,
        rocof_violation=rocof_violations[policy.rocof_limit],
        rocof_violations=rocof_violations,
        min_freq=float(freq.min()),
        max_freq=float(freq.max()),
    )
