from __future__ import annotations

from collections.abc import Callable
from dataclasses import replace

import numpy as np
import pytest

from laasim.analysis import compute_metrics, max_rocof
from laasim.attacks import AttackScenario, dynamic_laa, static_laa
from laasim.dynamics import (
    CompiledSystem,
    SimulationConfig,
    SystemState,
    coi_frequency,
    derivatives,
    run,
)
from laasim.errors import NumericalInstabilityError, ScenarioError
from laasim.grid import NetworkModel, load_gb36
from laasim.services.bess import make_unit, steady_state_injection
from laasim.services.curves import ServiceMode
from tests.utils import triangle, two_zone

SHORT = SimulationConfig(dt=0.01, horizon=10.0)


@pytest.mark.parametrize("build", [two_zone, triangle], ids=["two_zone", "triangle"])
def test_equilibrium_is_a_fixed_point(build: Callable[[], NetworkModel]) -> None:
    model = build()
    system = CompiledSystem.from_model(model)
    state = SystemState.equilibrium(model, system)
    rates = derivatives(state, model, system)
    assert np.abs(rates.freq_dev).max() < 1e-9
    assert np.abs(rates.gov_power).max() < 1e-9

    trace = run(model, config=SHORT)
    assert trace.completed
    assert np.abs(trace.coi_freq - 50.0).max() < 1e-9
    assert np.abs(trace.zone_freq - 50.0).max() < 1e-9
    assert trace.events == ()


@pytest.mark.slow
def test_gb36_holds_nominal_without_attack() -> None:
    trace = run(load_gb36(), config=SimulationConfig(dt=0.01, horizon=180.0))
    assert np.abs(trace.coi_freq - 50.0).max() < 1e-9


def test_initial_rocof_matches_swing_equation() -> None:
    # ΣH·S = 10000 MVA·s, so 100 MW gives -100·50/(2·10000) Hz/s = -0.005 p.u./s
    model = two_zone(damping=0.0)
    trace = run(model, static_laa("A", 100.0), SHORT)
    assert max_rocof(trace, window=0.02) == pytest.approx(-0.005, rel=0.02)


def test_steps_apply_on_the_next_boundary() -> None:
    trace = run(two_zone(), static_laa("A", 50.0, t0=1.004), SHORT)
    (event,) = trace.events
    assert event.kind == "attack_step"
    assert event.time == 1.004
    assert event.payload["applied_at"] == pytest.approx(1.01)
    applied = trace.time[np.nonzero(trace.attack_mw)[0][0]]
    assert applied == pytest.approx(1.01)


def test_stop_below_keeps_the_breaching_sample() -> None:
    config = SimulationConfig(dt=0.01, horizon=30.0, sample_every=10)
    trace = run(two_zone(), static_laa("A", 1000.0), config, stop_below=49.5)
    assert not trace.completed
    assert trace.coi_freq[-1] < 49.5
    assert (trace.coi_freq[:-1] >= 49.5).all()
    assert trace.time[-1] < 30.0


def test_negative_load_is_rejected() -> None:
    with pytest.raises(ScenarioError, match="below zero"):
        run(two_zone(), static_laa("A", -600.0), SHORT)


def test_unknown_zone_is_rejected() -> None:
    with pytest.raises(ScenarioError, match="unknown zone"):
        run(two_zone(), static_laa("Z8", 100.0), SHORT)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_oversized_step_blows_up() -> None:
    # the inter-zone swing mode is far outside the RK4 stability region at dt = 1 s
    config = SimulationConfig(dt=1.0, horizon=600.0)
    with pytest.raises(NumericalInstabilityError) as exc_info:
        run(two_zone(), static_laa("A", 100.0), config)
    assert exc_info.value.time > 1.0


def test_load_shedding_trips_once() -> None:
    trace = run(two_zone(), static_laa("A", 1000.0), SHORT)
    assert trace.ufls_triggered
    trips = [e for e in trace.events if e.kind == "ufls_trip"]
    assert len(trips) == 1
    assert trips[0].payload["shed_mw"] == pytest.approx(50.0)

    below = trace.time[np.nonzero(trace.coi_freq <= 48.8)[0][0]]
    assert trips[0].time == pytest.approx(below + 0.1, abs=1e-6)

    np.testing.assert_allclose(trace.zone_load[-1], [1475.0, 475.0])
    assert trace.shed_mw[0] == 0.0
    assert trace.shed_mw[-1] == pytest.approx(50.0)


def test_runs_are_deterministic() -> None:
    scenario = static_laa("B", 120.0)
    first = run(triangle(), scenario, SHORT)
    again = run(triangle(), scenario, SHORT)
    np.testing.assert_array_equal(first.coi_freq, again.coi_freq)
    np.testing.assert_array_equal(first.zone_freq, again.zone_freq)
    assert first.events == again.events


def test_bess_raises_the_nadir() -> None:
    config = SimulationConfig(dt=0.01, horizon=30.0)
    scenario = static_laa("A", 150.0)
    unit = make_unit("B1", "A", 100.0, ServiceMode.DYNAMIC_CONTAINMENT)
    plain = run(two_zone(), scenario, config)
    supported = run(two_zone(bess=(unit,)), scenario, config)

    assert supported.bess_ids == ("B1",)
    assert supported.coi_freq.min() > plain.coi_freq.min()
    assert 0.0 < supported.bess_power.max() <= 100.0
    assert supported.to_frame()["p_bess_B1"].max() > 0.0


def test_trace_frame_columns() -> None:
    trace = run(two_zone(), static_laa("A", 50.0), SHORT)
    assert trace.to_frame().columns == ["time", "coi_freq", "shed_mw", "f_A", "f_B"]
    columns = trace.to_frame(include_load=True).columns
    assert columns[-3:] == ["attack_mw", "load_A", "load_B"]
    assert len(trace) == 1001
    assert trace.span == pytest.approx(10.0)


def test_empty_scenario_equals_default() -> None:
    first = run(two_zone(), AttackScenario(), SHORT)
    again = run(two_zone(), None, SHORT)
    np.testing.assert_array_equal(first.coi_freq, again.coi_freq)


def test_coi_frequency_weights_by_inertia() -> None:
    model = triangle()
    system = CompiledSystem.from_model(model)
    state = SystemState.equilibrium(model, system)
    state = replace(state, freq_dev=np.array([-0.3, 0.0, 0.0]))
    # H·S of 4000, 1500 and 2500 MVA·s
    assert coi_frequency(state, model) == pytest.approx(50.0 - 0.3 * 4000 / 8000)
    expected = coi_frequency(state, model)
    assert coi_frequency(state, model, system) == pytest.approx(expected)


def test_staged_attack_crosses_later_and_settles_alike() -> None:
    model = two_zone()
    config = SimulationConfig(dt=0.01, horizon=120.0)
    static = compute_metrics(run(model, static_laa("B", 200.0), config))
    staged = compute_metrics(run(model, dynamic_laa("B", 200.0), config))

    static_cross, staged_cross = static.first_crossing[49.8], staged.first_crossing[49.8]
    assert static_cross is not None
    assert staged_cross is not None
    assert staged_cross > static_cross
    assert staged.settling_freq == pytest.approx(static.settling_freq, abs=0.01)


def test_halving_dt_converges() -> None:
    scenario = static_laa("C", 300.0)

    def coi_every_20ms(dt: float) -> np.ndarray:
        trace = run(triangle(), scenario, SimulationConfig(dt=dt, horizon=40.0))
        return trace.coi_freq[:: round(0.02 / dt)]

    coi = [coi_every_20ms(dt) for dt in (0.02, 0.01, 0.005)]
    coarse = np.abs(coi[0] - coi[2]).max()
    fine = np.abs(coi[1] - coi[2]).max()
    assert fine <= coarse + 1e-10
    assert coarse < 1e-3
    assert abs(coi[1].min() - coi[2].min()) < 1e-3


def test_zone_order_does_not_matter() -> None:
    model = triangle()
    shuffled = replace(
        model,
        zones=model.zones[::-1],
        lines=model.lines[::-1],
        generators=model.generators[::-1],
    )
    scenario = static_laa("C", 300.0)
    first, again = run(model, scenario, SHORT), run(shuffled, scenario, SHORT)

    assert again.zone_ids == ("C", "B", "A")
    np.testing.assert_allclose(again.coi_freq, first.coi_freq, atol=1e-8)
    for zone in model.zone_ids:
        np.testing.assert_allclose(
            again.zone_freq[:, again.zone_ids.index(zone)],
            first.zone_freq[:, first.zone_ids.index(zone)],
            atol=1e-8,
        )


def test_nadir_deepens_with_magnitude() -> None:
    config = SimulationConfig(dt=0.01, horizon=20.0)
    nadirs = [
        float(run(two_zone(), static_laa("A", mw), config).coi_freq.min())
        for mw in (25.0, 50.0, 100.0, 150.0, 200.0, 300.0)
    ]
    assert all(b < a for a, b in zip(nadirs, nadirs[1:], strict=False))
    raised = [
        float(run(two_zone(), static_laa("A", -mw), config).coi_freq.max())
        for mw in (50.0, 100.0, 200.0)
    ]
    assert all(b > a for a, b in zip(raised, raised[1:], strict=False))


def test_bess_ramp_never_exceeds_rate() -> None:
    unit = make_unit("B1", "A", 100.0, ServiceMode.DYNAMIC_REGULATION)
    config = SimulationConfig(dt=0.01, horizon=30.0)
    scenario = dynamic_laa("B", 200.0)
    trace = run(two_zone(bess=(unit,)), scenario, config)

    steps = np.abs(np.diff(trace.bess_power[:, 0]))
    assert steps.max() > 0.0
    assert steps.max() <= unit.ramp_rate * config.dt + 1e-9


def test_settled_bess_output_follows_droop() -> None:
    fleet = (
        make_unit("B1", "A", 100.0, ServiceMode.DYNAMIC_CONTAINMENT),
        make_unit("B2", "B", 60.0, ServiceMode.DYNAMIC_REGULATION),
    )
    model = two_zone(bess=fleet)
    config = SimulationConfig(dt=0.01, horizon=120.0)
    trace = run(model, static_laa("A", 200.0), config)

    deviation = trace.zone_freq[-1] - model.nominal_freq
    expected = steady_state_injection(fleet, model.zone_index, deviation)
    assert expected.min() > 0.0
    np.testing.assert_allclose(trace.bess_power[-1], expected, atol=0.5)


def test_regulation_delivers_more_energy_than_containment() -> None:
    config = SimulationConfig(dt=0.01, horizon=60.0)
    scenario = static_laa("A", 200.0)
    energy = {}
    for mode in (ServiceMode.DYNAMIC_CONTAINMENT, ServiceMode.DYNAMIC_REGULATION):
        unit = make_unit("B1", "A", 100.0, mode)
        trace = run(two_zone(bess=(unit,)), scenario, config)
        energy[mode] = float(trace.bess_power[:, 0].sum() * config.dt)
    dc = energy[ServiceMode.DYNAMIC_CONTAINMENT]
    assert energy[ServiceMode.DYNAMIC_REGULATION] >= dc > 0.0
