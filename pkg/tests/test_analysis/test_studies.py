"""Study orderings on the shipped GB-36 analogue; run with ``-m slow``."""

from __future__ import annotations

import pytest

from laasim.analysis import (
    compute_metrics,
    find_min_laa,
    location_cells,
    placement_cells,
    sweep_tables,
)
from laasim.attacks import (
    AdversaryPolicy,
    Strategy,
    dynamic_laa,
    feedback_adversary,
    static_laa,
)
from laasim.dynamics import SimulationConfig, run
from laasim.grid import NetworkModel, load_gb36
from laasim.services import fleet_preset

pytestmark = pytest.mark.slow

CONFIG = SimulationConfig(dt=0.01, horizon=60.0)
LONG = SimulationConfig(dt=0.01, horizon=120.0)
BRACKET = (0.0, 3000.0)


@pytest.fixture(scope="module")
def gb36() -> NetworkModel:
    return load_gb36()


def _threshold(model: NetworkModel, bess: str, limit: float = 49.8) -> float:
    fleet_model = model.with_fleet(fleet_preset(bess))
    return find_min_laa(fleet_model, "Z8", limit, BRACKET, config=CONFIG).min_laa


def test_no_bess_threshold_is_in_calibration_band(gb36: NetworkModel) -> None:
    assert 300.0 <= _threshold(gb36, "none") <= 1500.0


def test_bess_modes_raise_the_threshold(gb36: NetworkModel) -> None:
    none = _threshold(gb36, "none")
    dc = _threshold(gb36, "dc-500")
    dr = _threshold(gb36, "dr-500")
    assert none + 1.0 <= dc
    assert none + 1.0 <= dr
    assert dr >= dc


def test_threshold_grows_with_fleet_size(gb36: NetworkModel) -> None:
    sizes = [_threshold(gb36, bess) for bess in ("paper-400", "paper-500", "paper-600")]
    assert sizes == sorted(sizes)


def test_deeper_limits_need_larger_attacks(gb36: NetworkModel) -> None:
    limits = [_threshold(gb36, "none", limit) for limit in (49.8, 49.5, 48.8)]
    assert limits == sorted(limits)


def test_static_and_dynamic_share_the_settling_point(gb36: NetworkModel) -> None:
    model = gb36.with_fleet(fleet_preset("paper-500"))
    static = compute_metrics(run(model, static_laa("Z8", 660.0), LONG))
    dynamic = compute_metrics(run(model, dynamic_laa("Z8", 660.0), LONG))
    assert abs(dynamic.max_rocof) < abs(static.max_rocof)
    assert dynamic.settling_freq == pytest.approx(static.settling_freq, abs=0.01)


def test_staged_attack_crosses_no_earlier(gb36: NetworkModel) -> None:
    magnitude = 1.5 * _threshold(gb36, "none")
    static = compute_metrics(run(gb36, static_laa("Z8", magnitude), LONG))
    dynamic = compute_metrics(run(gb36, dynamic_laa("Z8", magnitude), LONG))

    static_cross = static.first_crossing[49.8]
    dynamic_cross = dynamic.first_crossing[49.8]
    assert static_cross is not None
    assert dynamic_cross is None or dynamic_cross > static_cross
    # the first step is half the threshold load and cannot breach on its own
    assert dynamic_cross is None or dynamic_cross >= 3.0


@pytest.mark.parametrize("strategy", list(Strategy))
def test_adversary_breaches_within_budget(
    gb36: NetworkModel, strategy: Strategy
) -> None:
    policy = AdversaryPolicy(
        budget=2000.0,
        vulnerable_zones=gb36.zone_ids,
        strategy=strategy,
        impact_target=49.8,
    )
    outcome = feedback_adversary(gb36, policy, CONFIG)
    assert outcome.achieved
    assert outcome.nadir < 49.8
    assert 0.0 < outcome.scenario.total_magnitude <= 2000.0 + 1e-9


def test_location_changes_rocof_not_settling(gb36: NetworkModel) -> None:
    rows = sweep_tables(gb36, location_cells(), LONG)
    assert all(row.ok for row in rows)
    settling = [row.metrics.settling_freq for row in rows]
    rocof = [abs(row.metrics.max_zonal_rocof) for row in rows]
    assert max(settling) - min(settling) <= 0.02
    assert max(rocof) >= 1.5 * min(rocof)


def test_colocated_fleet_does_not_worsen_rocof(gb36: NetworkModel) -> None:
    rows = sweep_tables(gb36, placement_cells(), CONFIG)
    distributed, colocated = (row.metrics for row in rows)
    assert abs(colocated.max_rocof) <= abs(distributed.max_rocof) + 1e-12
