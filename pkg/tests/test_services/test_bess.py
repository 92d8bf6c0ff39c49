from __future__ import annotations

import numpy as np
import pytest

from laasim.services import (
    BessState,
    ServiceMode,
    fleet_injection,
    make_unit,
    steady_state_injection,
    update_delivery,
)

DT = 0.01


def _drive(unit, target: float, start: float, end: float, state=None):
    """Feed a constant target from ``start`` and return delivered power per boundary."""
    state = state or BessState.initial(unit)
    delivered = {}
    for k in range(round(start / DT), round(end / DT) + 1):
        now = k * DT
        state = update_delivery(unit, state, target, now, DT)
        delivered[round(now, 6)] = state.delivered
    return state, delivered


def test_activation_timing() -> None:
    unit = make_unit("DC-A-1", "A", 100.0, ServiceMode.DYNAMIC_CONTAINMENT)
    _, delivered = _drive(unit, 100.0, start=2.0, end=3.5)
    assert delivered[2.49] == 0.0
    assert delivered[2.5] == 0.0
    assert 0.0 < delivered[2.51] < 100.0
    assert delivered[3.0] == pytest.approx(100.0)
    assert delivered[2.99] < 100.0
    assert delivered[3.5] == pytest.approx(100.0)


def test_ramp_is_linear() -> None:
    unit = make_unit("DR-A-1", "A", 50.0, ServiceMode.DYNAMIC_REGULATION)
    assert unit.ramp_rate == 100.0
    _, delivered = _drive(unit, 50.0, start=0.0, end=1.0)
    assert delivered[0.75] == pytest.approx(25.0)


def test_partial_target_is_held() -> None:
    unit = make_unit("DC-A-1", "A", 100.0, ServiceMode.DYNAMIC_CONTAINMENT)
    _, delivered = _drive(unit, 30.0, start=0.0, end=2.0)
    assert delivered[2.0] == pytest.approx(30.0)


def test_deadband_disarms_and_ramps_down() -> None:
    unit = make_unit("DC-A-1", "A", 100.0, ServiceMode.DYNAMIC_CONTAINMENT)
    state, _ = _drive(unit, 100.0, start=0.0, end=1.5)
    assert state.armed_since == 0.0
    state, delivered = _drive(unit, 0.0, start=1.51, end=3.0, state=state)
    assert state.armed_since is None
    assert delivered[1.51] == pytest.approx(98.0)
    assert delivered[3.0] == 0.0


def test_energy_budget_stops_delivery() -> None:
    # 100 MW for 36 s is 1 MWh
    unit = make_unit(
        "DC-A-1",
        "A",
        100.0,
        ServiceMode.DYNAMIC_CONTAINMENT,
        energy_capacity=1.0,
    )
    state, delivered = _drive(unit, 100.0, start=0.0, end=60.0)
    assert delivered[10.0] == pytest.approx(100.0)
    assert delivered[60.0] == 0.0
    assert state.energy_used <= 1.0 + 1e-9
    assert state.soc == pytest.approx(0.0, abs=1e-6)


def test_exhausted_unit_stays_at_zero() -> None:
    unit = make_unit(
        "DC-A-1",
        "A",
        100.0,
        ServiceMode.DYNAMIC_CONTAINMENT,
        energy_capacity=0.05,
    )
    state = BessState.initial(unit)
    delivered, used = [], []
    for k in range(1001):
        state = update_delivery(unit, state, 100.0, k * DT, DT)
        delivered.append(state.delivered)
        used.append(state.energy_used)

    exhausted = next(k for k, e in enumerate(used) if e >= 0.05 - 1e-12)
    assert 0.0 < delivered[exhausted] <= 100.0
    assert all(p == 0.0 for p in delivered[exhausted + 1 :])
    assert max(used) == pytest.approx(0.05, abs=1e-12)
    assert np.all(np.diff(used) >= 0.0)


def test_initial_soc_is_half_capacity() -> None:
    unit = make_unit(
        "DC-A-1", "A", 10.0, ServiceMode.DYNAMIC_CONTAINMENT, energy_capacity=8.0
    )
    assert BessState.initial(unit).soc == 4.0
    no_budget = make_unit("DC-A-2", "A", 10.0, ServiceMode.DYNAMIC_CONTAINMENT)
    assert BessState.initial(no_budget).soc is None


def test_rejects_non_positive_dt() -> None:
    unit = make_unit("DC-A-1", "A", 10.0, ServiceMode.DYNAMIC_CONTAINMENT)
    with pytest.raises(ValueError, match="dt"):
        update_delivery(unit, BessState(), 10.0, 0.0, 0.0)


def test_fleet_uses_local_zone_deviation() -> None:
    fleet = (
        make_unit("DR-A-1", "A", 40.0, ServiceMode.DYNAMIC_REGULATION),
        make_unit("DR-B-1", "B", 60.0, ServiceMode.DYNAMIC_REGULATION),
    )
    index = {"A": 0, "B": 1}
    dev = np.array([-0.3, 0.0])
    np.testing.assert_allclose(steady_state_injection(fleet, index, dev), [40.0, 0.0])

    states = tuple(BessState() for _ in fleet)
    for k in range(101):
        response = fleet_injection(fleet, states, index, dev, k * DT, DT)
        states = response.states
    np.testing.assert_allclose(response.injection, [40.0, 0.0])
    assert states[1].armed_since is None
