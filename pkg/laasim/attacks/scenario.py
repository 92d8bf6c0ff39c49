"""Load-altering attack scenarios and their load staircases."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from laasim.errors import ScenarioError

DYNAMIC_STEP_TIMES: tuple[float, ...] = (1.0, 3.0, 6.0)
_TIME_EPS = 1e-9


@dataclass(frozen=True)
class AttackStep:
    """Load change of ``delta`` MW at ``zone``; positive values add load."""

    time: float
    zone: str
    delta: float

    def __post_init__(self) -> None:
        if not self.time >= 0 or not math.isfinite(self.time):
            msg = f"Attack step time must be a finite value >= 0, got {self.time}."
            raise ScenarioError(msg)
        if not math.isfinite(self.delta):
            msg = f"Attack step delta must be finite, got {self.delta}."
            raise ScenarioError(msg)


@dataclass(frozen=True)
class AttackScenario:
    steps: tuple[AttackStep, ...] = ()
    label: str = "no-attack"

    def __post_init__(self) -> None:
        times = [s.time for s in self.steps]
        if times != sorted(times):
            msg = f"Scenario '{self.label}': steps must be sorted by time, got {times}."
            raise ScenarioError(msg)

    @property
    def total_magnitude(self) -> float:
        return math.fsum(s.delta for s in self.steps)

    @property
    def zones(self) -> tuple[str, ...]:
        """Attacked zones in order of first appearance."""
        return tuple(dict.fromkeys(s.zone for s in self.steps))

    @property
    def is_empty(self) -> bool:
        return not self.steps


def _check_magnitude(magnitude: float) -> None:
    if magnitude == 0 or not math.isfinite(magnitude):
        msg = f"Attack magnitude must be non-zero and finite, got {magnitude}."
        raise ScenarioError(msg)


def static_laa(
    zone: str,
    magnitude: float,
    t0: float = 1.0,
    label: str | None = None,
) -> AttackScenario:
    """Single simultaneous load step of ``magnitude`` MW at ``t0``.

    Examples:
        >>> from laasim.attacks import static_laa
        >>> static_laa("Z8", 660.0).steps
        (AttackStep(time=1.0, zone='Z8', delta=660.0),)
    """
    _check_magnitude(magnitude)
    return AttackScenario(
        steps=(AttackStep(t0, zone, magnitude),),
        label=label or f"static-{zone}-{magnitude:g}",
    )


def dynamic_laa(
    zone: str,
    magnitude: float,
    times: Sequence[float] = DYNAMIC_STEP_TIMES,
    label: str | None = None,
) -> AttackScenario:
    """Same total load change as ``static_laa`` split into equal steps at ``times``.

    The last step absorbs the rounding so the deltas sum to ``magnitude``.
    """
    _check_magnitude(magnitude)
    times = tuple(float(t) for t in times)
    if not times or any(b <= a for a, b in zip(times, times[1:], strict=False)):
        msg = (
            "Dynamic attack times must be non-empty and strictly increasing, "
            f"got {times}."
        )
        raise ScenarioError(msg)

    part = magnitude / len(times)
    deltas = [part] * (len(times) - 1)
    deltas.append(magnitude - math.fsum(deltas))
    return AttackScenario(
        steps=tuple(AttackStep(t, zone, d) for t, d in zip(times, deltas, strict=True)),
        label=label or f"dynamic-{zone}-{magnitude:g}",
    )


@dataclass(frozen=True, eq=False)
class LoadProfile:
    """Right-continuous per-zone staircase of attack load.

    Attributes:
        zone_ids: Column order of ``levels``.
        times: Boundary-aligned times at which the staircase changes.
        levels: Cumulative load delta per zone after each change, shape
            ``(len(times), len(zone_ids))``.
    """

    zone_ids: tuple[str, ...]
    times: np.ndarray
    levels: np.ndarray

    @cached_property
    def final(self) -> np.ndarray:
        if self.times.size == 0:
            return np.zeros(len(self.zone_ids))
        return self.levels[-1]

    def at(self, t: float) -> np.ndarray:
        """Per-zone attack load in MW at time ``t``."""
        idx = int(np.searchsorted(self.times, t + _TIME_EPS, side="right")) - 1
        if idx < 0:
            return np.zeros(len(self.zone_ids))
        return self.levels[idx]

    def total(self, time: np.ndarray) -> np.ndarray:
        """System-wide attack load at each entry of ``time``."""
        time = np.asarray(time, dtype=float)
        totals = np.r_[0.0, self.levels.sum(axis=1)]
        return totals[np.searchsorted(self.times, time + _TIME_EPS, side="right")]


def scenario_to_profile(
    scenario: AttackScenario,
    horizon: float,
    dt: float,
    zone_ids: Sequence[str] | None = None,
) -> LoadProfile:
    """Turn the steps into a per-zone staircase on the ``dt`` grid.

    Each step takes effect at the first integration boundary at or after its time.

    Raises:
        ScenarioError: If a step lies at or beyond ``horizon`` or names a zone
            outside ``zone_ids``.
    """
    zone_ids = tuple(zone_ids) if zone_ids is not None else scenario.zones
    index = {z: i for i, z in enumerate(zone_ids)}

    unknown = [s.zone for s in scenario.steps if s.zone not in index]
    if unknown:
        zones = sorted(set(unknown))
        msg = f"Scenario '{scenario.label}' attacks unknown zone(s): {zones}."
        raise ScenarioError(msg)
    late = [s.time for s in scenario.steps if s.time >= horizon]
    if late:
        msg = (
            f"Scenario '{scenario.label}' has steps at or after "
            f"the {horizon} s horizon."
        )
        raise ScenarioError(msg)

    aligned: dict[float, np.ndarray] = {}
    for s in scenario.steps:
        t = math.ceil(s.time / dt - _TIME_EPS) * dt
        aligned.setdefault(t, np.zeros(len(zone_ids)))[index[s.zone]] += s.delta

    times = np.array(sorted(aligned), dtype=float)
    if times.size == 0:
        levels = np.zeros((0, len(zone_ids)))
    else:
        levels = np.cumsum(np.vstack([aligned[t] for t in sorted(aligned)]), axis=0)
    return LoadProfile(zone_ids=zone_ids, times=times, levels=levels)


def random_laa_scenarios(
    zones: Sequence[str],
    count: int,
    magnitude_range: tuple[float, float] = (100.0, 1500.0),
    seed: int = 0,
    *,
    dynamic: bool = False,
    t0: float = 1.0,
) -> list[AttackScenario]:
    """Seeded random attacks: one zone and one magnitude drawn per scenario."""
    if not zones:
        msg = "Cannot sample attacks without candidate zones."
        raise ScenarioError(msg)
    lo, hi = magnitude_range
    if not 0 < lo <= hi:
        msg = f"magnitude_range must satisfy 0 < lo <= hi, got {magnitude_range}."
        raise ScenarioError(msg)

    rng = np.random.default_rng(seed)
    scenarios = []
    for i in range(count):
        zone = zones[int(rng.integers(len(zones)))]
        magnitude = round(float(rng.uniform(lo, hi)), 2)
        label = f"random-{seed}-{i:03d}"
        if dynamic:
            shifted = tuple(t0 + t - DYNAMIC_STEP_TIMES[0] for t in DYNAMIC_STEP_TIMES)
            scenarios.append(dynamic_laa(zone, magnitude, shifted, label=label))
        else:
            scenarios.append(static_laa(zone, magnitude, t0, label=label))
    return scenarios
