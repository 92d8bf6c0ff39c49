"""Battery unit dynamics: arming, activation delay, ramping and energy budget."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from laasim.services.curves import ServiceCurve, ServiceMode, default_curve, droop_target

_TIME_EPS = 1e-9
_ENERGY_EPS = 1e-12


@dataclass(frozen=True)
class BessUnit:
    id: str
    zone: str
    rating: float
    mode: ServiceMode
    curve: ServiceCurve = field(default_factory=ServiceCurve)
    activation_delay: float = 0.5
    full_delivery_time: float = 1.0
    energy_capacity: float | None = None

    @property
    def ramp_rate(self) -> float:
        """MW/s reached between the end of the activation delay and full delivery."""
        return self.rating / (self.full_delivery_time - self.activation_delay)


@dataclass(frozen=True)
class BessState:
    delivered: float = 0.0
    armed_since: float | None = None
    energy_used: float = 0.0
    soc: float | None = None

    @classmethod
    def initial(cls, unit: BessUnit) -> BessState:
        soc = None if unit.energy_capacity is None else 0.5 * unit.energy_capacity
        return cls(soc=soc)


def make_unit(
    unit_id: str,
    zone: str,
    rating: float,
    mode: ServiceMode,
    *,
    curve: ServiceCurve | None = None,
    activation_delay: float = 0.5,
    full_delivery_time: float = 1.0,
    energy_capacity: float | None = None,
) -> BessUnit:
    """Build a unit, defaulting to the standard curve of its service mode."""
    return BessUnit(
        id=unit_id,
        zone=zone,
        rating=rating,
        mode=mode,
        curve=curve or default_curve(mode),
        activation_delay=activation_delay,
        full_delivery_time=full_delivery_time,
        energy_capacity=energy_capacity,
    )


def _move_toward(value: float, target: float, budget: float) -> float:
    if value < target:
        return min(value + budget, target)
    return max(value - budget, target)


def update_delivery(
    unit: BessUnit,
    state: BessState,
    target: float,
    now: float,
    dt: float,
) -> BessState:
    """Advance one unit to time ``now`` given the droop target for this step.

    A zero target means the deviation sits in the deadband: the unit disarms and
    ramps back to zero. A non-zero target arms the unit (once); output stays put
    until ``armed_since + activation_delay`` and then ramps at ``unit.ramp_rate``,
    so a full-power request reaches rating at ``armed_since + full_delivery_time``.
    """
    if dt <= 0:
        msg = f"dt must be positive, got {dt}."
        raise ValueError(msg)

    ramp = unit.ramp_rate
    if target == 0.0:
        armed_since = None
        effective, budget = 0.0, ramp * dt
    else:
        armed_since = now if state.armed_since is None else state.armed_since
        active_for = now - (armed_since + unit.activation_delay)
        if active_for < -_TIME_EPS:
            effective, budget = 0.0, ramp * dt
        else:
            effective = target
            budget = ramp * min(dt, max(active_for, 0.0))

    delivered = _move_toward(state.delivered, effective, budget)
    delivered = float(np.clip(delivered, -unit.rating, unit.rating))

    energy_used, soc = state.energy_used, state.soc
    step_energy = abs(delivered) * dt / 3600.0
    if unit.energy_capacity is not None:
        remaining = max(unit.energy_capacity - energy_used, 0.0)
        if remaining <= _ENERGY_EPS:
            # exhausted units stay at zero
            delivered, step_energy = 0.0, 0.0
        elif step_energy > remaining:
            delivered = float(np.sign(delivered)) * remaining * 3600.0 / dt
            step_energy = remaining
        if soc is not None:
            soc = float(np.clip(soc - delivered * dt / 3600.0, 0.0, unit.energy_capacity))
    energy_used += step_energy

    return replace(
        state,
        delivered=delivered,
        armed_since=armed_since,
        energy_used=energy_used,
        soc=soc,
    )


class FleetResponse(NamedTuple):
    states: tuple[BessState, ...]
    injection: np.ndarray


def fleet_injection(
    fleet: Sequence[BessUnit],
    states: Sequence[BessState],
    zone_index: Mapping[str, int],
    freq_dev: np.ndarray,
    now: float,
    dt: float,
) -> FleetResponse:
    """Update every unit against its own zone's deviation and sum output per zone."""
    injection = np.zeros(len(freq_dev))
    new_states = []
    for unit, state in zip(fleet, states, strict=True):
        idx = zone_index[unit.zone]
        target = droop_target(unit.curve, unit.rating, float(freq_dev[idx]))
        new_state = update_delivery(unit, state, target, now, dt)
        injection[idx] += new_state.delivered
        new_states.append(new_state)
    return FleetResponse(tuple(new_states), injection)


def steady_state_injection(
    fleet: Sequence[BessUnit],
    zone_index: Mapping[str, int],
    freq_dev: np.ndarray,
) -> np.ndarray:
    """Per-zone output once every unit has fully ramped to its droop target."""
    injection = np.zeros(len(freq_dev))
    for unit in fleet:
        idx = zone_index[unit.zone]
        injection[idx] += droop_target(unit.curve, unit.rating, float(freq_dev[idx]))
    return injection
