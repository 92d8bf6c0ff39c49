from __future__ import annotations

import numpy as np
import pytest

from laasim.services import ServiceCurve, ServiceMode, default_curve, droop_target

RATING = 100.0


def _oracle(curve: ServiceCurve, dev: float) -> float:
    knots = curve.knots
    return float(np.interp(dev, knots, [RATING, 0.0, 0.0, -RATING]))


@pytest.mark.parametrize("mode", list(ServiceMode))
def test_matches_interpolation_oracle(mode: ServiceMode) -> None:
    curve = default_curve(mode)
    rng = np.random.default_rng(2024)
    for dev in rng.uniform(-0.8, 0.8, 1000):
        assert droop_target(curve, RATING, float(dev)) == pytest.approx(
            _oracle(curve, float(dev)),
            abs=1e-9,
        )


@pytest.mark.parametrize("mode", list(ServiceMode))
@pytest.mark.parametrize("dev", [-0.015, 0.0, 0.015, 0.01])
def test_deadband_gives_nothing(mode: ServiceMode, dev: float) -> None:
    assert droop_target(default_curve(mode), RATING, dev) == 0.0


@pytest.mark.parametrize(
    ("mode", "dev", "expected"),
    [
        (ServiceMode.DYNAMIC_REGULATION, -0.2, RATING),
        (ServiceMode.DYNAMIC_REGULATION, 0.2, -RATING),
        (ServiceMode.DYNAMIC_MODERATION, -0.2, RATING),
        (ServiceMode.DYNAMIC_CONTAINMENT, -0.5, RATING),
        (ServiceMode.DYNAMIC_CONTAINMENT, 0.5, -RATING),
        (ServiceMode.DYNAMIC_CONTAINMENT, -0.2, RATING * 0.185 / 0.485),
        (ServiceMode.DYNAMIC_REGULATION, -0.5, RATING),
        (ServiceMode.DYNAMIC_CONTAINMENT, -1.2, RATING),
    ],
)
def test_reference_points(mode: ServiceMode, dev: float, expected: float) -> None:
    target = droop_target(default_curve(mode), RATING, dev)
    assert target == pytest.approx(expected, abs=1e-9)


def test_full_deviation_per_mode() -> None:
    assert default_curve(ServiceMode.DYNAMIC_CONTAINMENT).full_deviation == 0.5
    assert default_curve(ServiceMode.DYNAMIC_MODERATION).full_deviation == 0.2
    assert default_curve(ServiceMode.DYNAMIC_REGULATION).full_deviation == 0.2


def test_asymmetric_curve_ignores_over_frequency() -> None:
    curve = ServiceCurve(full_deviation=0.5, symmetric=False)
    assert droop_target(curve, RATING, 0.4) == 0.0
    assert droop_target(curve, RATING, -0.5) == RATING


def test_mode_values_follow_schema_codes() -> None:
    assert ServiceMode("DC") is ServiceMode.DYNAMIC_CONTAINMENT
    assert [m.value for m in ServiceMode] == ["DC", "DM", "DR"]
