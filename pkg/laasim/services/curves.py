"""Frequency-response service curves for battery units."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

DEADBAND_HZ = 0.015


class ServiceMode(str, Enum):
    """Dynamic frequency response products, valued by their schema code."""

    DYNAMIC_CONTAINMENT = "DC"
    DYNAMIC_MODERATION = "DM"
    DYNAMIC_REGULATION = "DR"


@dataclass(frozen=True)
class ServiceCurve:
    """Piecewise-linear power/frequency characteristic.

    Output is zero inside ``±deadband``, ramps linearly to full rating at
    ``±full_deviation`` and saturates beyond. With ``symmetric=False`` the unit only
    answers under-frequency.
    """

    deadband: float = DEADBAND_HZ
    full_deviation: float = 0.5
    symmetric: bool = True

    @property
    def knots(self) -> tuple[float, float, float, float]:
        return (-self.full_deviation, -self.deadband, self.deadband, self.full_deviation)


FULL_DEVIATION_HZ: dict[ServiceMode, float] = {
    ServiceMode.DYNAMIC_CONTAINMENT: 0.5,
    ServiceMode.DYNAMIC_MODERATION: 0.2,
    ServiceMode.DYNAMIC_REGULATION: 0.2,
}


def default_curve(mode: ServiceMode) -> ServiceCurve:
    return ServiceCurve(deadband=DEADBAND_HZ, full_deviation=FULL_DEVIATION_HZ[mode])


def droop_target(curve: ServiceCurve, rating: float, freq_dev: float) -> float:
    """Requested output in MW for a frequency deviation in Hz.

    Positive output means injection, so under-frequency gives a positive target.

    Examples:
        >>> from laasim.services.curves import ServiceCurve, droop_target
        >>> dc = ServiceCurve(full_deviation=0.5)
        >>> droop_target(dc, 100.0, -0.5)
        100.0
        >>> round(droop_target(dc, 100.0, -0.25), 2)
        48.45
    """
    span = curve.full_deviation - curve.deadband
    share = float(np.clip((abs(freq_dev) - curve.deadband) / span, 0.0, 1.0))
    if share == 0.0:
        return 0.0
    target = -math.copysign(rating * share, freq_dev)
    if not curve.symmetric and target < 0.0:
        return 0.0
    return target
