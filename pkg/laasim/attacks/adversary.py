"""Feedback-driven adversary: propose an attack, observe the nadir, escalate."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple

from loguru import logger

from laasim.attacks.scenario import (
    DYNAMIC_STEP_TIMES,
    AttackScenario,
    AttackStep,
    dynamic_laa,
)
from laasim.errors import ScenarioError

if TYPE_CHECKING:
    from collections.abc import Iterator

    from laasim.dynamics.config import SimulationConfig
    from laasim.grid.model import NetworkModel
    from laasim.protection.policy import ProtectionPolicy


class Strategy(str, Enum):
    LARGE_SCALE_STATIC = "LargeScaleStatic"
    LOW_BUDGET_DYNAMIC = "LowBudgetDynamic"


@dataclass(frozen=True)
class AdversaryPolicy:
    """What the adversary controls and what it tries to achieve.

    Attributes:
        budget: Largest total load change in MW.
        vulnerable_zones: Zones where the adversary holds compromised load.
        strategy: One full-budget step, or staged escalation in multi-step attacks.
        impact_target: COI frequency in Hz the adversary tries to get below.
        max_iterations: Upper bound on proposals. The static strategy has at most
            n(n+1)/2 distinct proposals for n vulnerable zones.
    """

    budget: float
    vulnerable_zones: tuple[str, ...]
    strategy: Strategy = Strategy.LARGE_SCALE_STATIC
    impact_target: float = 49.8
    max_iterations: int = 10
    t0: float = 1.0
    step_times: tuple[float, ...] = DYNAMIC_STEP_TIMES

    def __post_init__(self) -> None:
        if not self.budget > 0:
            msg = f"Adversary budget must be positive, got {self.budget}."
            raise ScenarioError(msg)
        if self.max_iterations < 1:
            msg = f"max_iterations must be >= 1, got {self.max_iterations}."
            raise ScenarioError(msg)


class AdversaryOutcome(NamedTuple):
    scenario: AttackScenario
    achieved: bool
    iterations: int
    nadir: float


def _ranked_zones(model: NetworkModel, zones: tuple[str, ...]) -> list[str]:
    unknown = [z for z in zones if z not in model.zone_index]
    if unknown:
        msg = f"Vulnerable zone(s) not in the model: {unknown}."
        raise ScenarioError(msg)
    demand = model.demand
    # stable sort keeps the listed order between equal demands
    return sorted(dict.fromkeys(zones), key=lambda z: -demand[model.zone_index[z]])


def _static_split(policy: AdversaryPolicy, zones: list[str]) -> AttackScenario:
    part = policy.budget / len(zones)
    deltas = [part] * (len(zones) - 1)
    deltas.append(policy.budget - math.fsum(deltas))
    return AttackScenario(
        steps=tuple(
            AttackStep(policy.t0, zone, delta)
            for zone, delta in zip(zones, deltas, strict=True)
        ),
        label=f"adversary-static-{'+'.join(zones)}",
    )


def _static_windows(ranked: list[str]) -> Iterator[list[str]]:
    # single zones by demand, then wider windows over the same ranking
    for width in range(1, len(ranked) + 1):
        for start in range(len(ranked) - width + 1):
            yield ranked[start : start + width]


def _proposals(policy: AdversaryPolicy, ranked: list[str]) -> list[AttackScenario]:
    if policy.strategy is Strategy.LARGE_SCALE_STATIC:
        windows = itertools.islice(_static_windows(ranked), policy.max_iterations)
        return [_static_split(policy, zones) for zones in windows]
    target = ranked[0]
    return [
        dynamic_laa(
            target,
            policy.budget * k / policy.max_iterations,
            policy.step_times,
            label=f"adversary-dynamic-{target}-{k}",
        )
        for k in range(1, policy.max_iterations + 1)
    ]


def feedback_adversary(
    model: NetworkModel,
    policy: AdversaryPolicy,
    config: SimulationConfig | None = None,
    protection: ProtectionPolicy | None = None,
) -> AdversaryOutcome:
    """Run proposals in order until one drives the COI nadir below the target.

    The static strategy puts the full budget on the highest-demand vulnerable zone
    and falls back to the next zones, then splits it evenly over windows of
    2, 3, ... zones adjacent in the demand ranking. It stops after
    ``max_iterations`` proposals or once every window has been tried. The dynamic
    strategy stays on the highest-demand zone and raises the multi-step magnitude
    by ``budget / max_iterations`` per iteration. No proposal exceeds the budget.

    Raises:
        ScenarioError: If ``vulnerable_zones`` is empty or names unknown zones.
    """
    from laasim.dynamics.engine import run  # noqa: PLC0415
    from laasim.dynamics.state import CompiledSystem  # noqa: PLC0415

    if not policy.vulnerable_zones:
        msg = "The adversary needs at least one vulnerable zone."
        raise ScenarioError(msg)

    system = CompiledSystem.from_model(model)
    proposals = _proposals(policy, _ranked_zones(model, policy.vulnerable_zones))
    nadir = model.nominal_freq
    for iteration, scenario in enumerate(proposals, start=1):
        trace = run(
            model,
            scenario,
            config,
            protection,
            stop_below=policy.impact_target,
            system=system,
        )
        nadir = float(trace.coi_freq.min())
        achieved = nadir < policy.impact_target
        logger.debug(
            f"Adversary iteration {iteration}: {scenario.label} "
            f"({scenario.total_magnitude:.1f} MW) -> min COI {nadir:.4f} Hz",
        )
        if achieved:
            logger.info(
                f"Adversary reached {policy.impact_target} Hz with {scenario.label}",
            )
            return AdversaryOutcome(
                scenario, achieved=True, iterations=iteration, nadir=nadir
            )

    return AdversaryOutcome(
        proposals[-1], achieved=False, iterations=len(proposals), nadir=nadir
    )
