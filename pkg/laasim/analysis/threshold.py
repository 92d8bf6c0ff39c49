"""Minimum load-altering attack that breaches a frequency limit, by bisection."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from loguru import logger

from laasim.analysis.metrics import DEFAULT_LIMITS, FrequencyMetrics, compute_metrics
from laasim.attacks.scenario import AttackScenario, dynamic_laa, static_laa
from laasim.dynamics.config import SimulationConfig
from laasim.dynamics.engine import run
from laasim.dynamics.state import CompiledSystem
from laasim.errors import BracketError

if TYPE_CHECKING:
    from laasim.grid.model import NetworkModel
    from laasim.protection.policy import ProtectionPolicy

DEFAULT_TOL_MW = 1.0


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of one threshold search.

    Attributes:
        limit: Frequency limit in Hz.
        min_laa: Smallest magnitude found to breach the limit, in MW.
        iterations: Simulation runs spent, endpoint checks included.
        lo: Largest magnitude known not to breach.
        lo_metrics: Full-horizon metrics at ``lo``.
        hi_metrics: Full-horizon metrics at ``min_laa``.
    """

    zone: str
    limit: float
    min_laa: float
    iterations: int
    lo: float
    lo_metrics: FrequencyMetrics
    hi_metrics: FrequencyMetrics

    def as_row(self) -> dict[str, Any]:
        return {
            "zone": self.zone,
            "limit_hz": self.limit,
            "min_laa_mw": round(self.min_laa, 2),
            "iterations": self.iterations,
            "nadir_at_min_laa_hz": round(self.hi_metrics.nadir, 4),
            "nadir_time_s": round(self.hi_metrics.nadir_time, 2),
            "max_rocof_pu_s": round(self.hi_metrics.max_rocof, 6),
            "settling_freq_hz": round(self.hi_metrics.settling_freq, 4),
            "ufls": self.hi_metrics.ufls_triggered,
        }


def attack_for(zone: str, magnitude: float, *, dynamic: bool = False) -> AttackScenario:
    """Static (or three-step dynamic) attack; zero magnitude means no attack."""
    if magnitude == 0:
        return AttackScenario(label="no-attack")
    if dynamic:
        return dynamic_laa(zone, magnitude)
    return static_laa(zone, magnitude)


def _min_coi(
    model: NetworkModel,
    zone: str,
    magnitude: float,
    limit: float,
    config: SimulationConfig,
    protection: ProtectionPolicy | None,
    system: CompiledSystem | None = None,
    *,
    dynamic: bool = False,
) -> float:
    trace = run(
        model,
        attack_for(zone, magnitude, dynamic=dynamic),
        config,
        protection,
        stop_below=limit,
        system=system,
    )
    return float(trace.coi_freq.min())


def _metrics_at(
    model: NetworkModel,
    zone: str,
    magnitude: float,
    config: SimulationConfig,
    protection: ProtectionPolicy | None,
    limits: tuple[float, ...],
    *,
    dynamic: bool = False,
) -> FrequencyMetrics:
    trace = run(model, attack_for(zone, magnitude, dynamic=dynamic), config, protection)
    return compute_metrics(trace, limits)


def find_min_laa(
    model: NetworkModel,
    zone: str,
    limit: float,
    bracket: tuple[float, float],
    tol: float = DEFAULT_TOL_MW,
    config: SimulationConfig | None = None,
    protection: ProtectionPolicy | None = None,
    *,
    dynamic: bool = False,
    max_workers: int = 1,
) -> ThresholdResult:
    """Bisect the attack magnitude at ``zone`` until the bracket is within ``tol``.

    A magnitude breaches when the COI frequency drops strictly below ``limit``.
    Search runs stop as soon as that happens; the reported metrics come from
    full-horizon runs at the final bracket ends.

    Args:
        model: Network, BESS fleet included.
        zone: Attacked zone.
        limit: Frequency limit in Hz.
        bracket: ``(lo, hi)`` in MW; ``lo`` must not breach and ``hi`` must.
        tol: Stop once ``hi - lo <= tol``.
        config: Integration settings.
        protection: Protection settings.
        dynamic: Use the three-step attack instead of a single step.
        max_workers: Processes used for the two endpoint checks.

    Raises:
        ValueError: If ``lo >= hi`` or ``tol <= 0``.
        BracketError: If the bracket does not straddle the limit.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        msg = f"Bracket must satisfy lo < hi, got ({lo}, {hi})."
        raise ValueError(msg)
    if not tol > 0:
        msg = f"tol must be positive, got {tol}."
        raise ValueError(msg)
    config = config or SimulationConfig()
    system = CompiledSystem.from_model(model)

    if max_workers > 1:
        with ProcessPoolExecutor(max_workers=min(max_workers, 2)) as pool:
            futures = [
                pool.submit(
                    _min_coi, model, zone, m, limit, config, protection, dynamic=dynamic
                )
                for m in (lo, hi)
            ]
            lo_min, hi_min = (f.result() for f in futures)
    else:
        lo_min, hi_min = (
            _min_coi(model, zone, m, limit, config, protection, system, dynamic=dynamic)
            for m in (lo, hi)
        )
    iterations = 2

    if lo_min < limit or not hi_min < limit:
        msg = (
            f"Bracket [{lo}, {hi}] MW at {zone} does not straddle {limit} Hz; "
            "lo must stay above the limit and hi must breach it"
        )
        raise BracketError(msg, lo_nadir=lo_min, hi_nadir=hi_min)

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        low = _min_coi(
            model, zone, mid, limit, config, protection, system, dynamic=dynamic
        )
        iterations += 1
        breached = low < limit
        logger.debug(
            f"Bisection {zone}@{limit} Hz: {mid:.3f} MW -> {low:.4f} Hz "
            f"({'breach' if breached else 'holds'})",
        )
        if breached:
            hi = mid
        else:
            lo = mid

    limits = tuple(sorted({*DEFAULT_LIMITS, limit}, reverse=True))
    lo_metrics, hi_metrics = (
        _metrics_at(model, zone, m, config, protection, limits, dynamic=dynamic)
        for m in (lo, hi)
    )
    result = ThresholdResult(
        zone=zone,
        limit=limit,
        min_laa=hi,
        iterations=iterations,
        lo=lo,
        lo_metrics=lo_metrics,
        hi_metrics=hi_metrics,
    )
    logger.info(
        f"Minimum LAA at {zone} for {limit} Hz: {hi:.2f} MW ({iterations} runs)",
    )
    return result


def max_bisection_runs(bracket: tuple[float, float], tol: float) -> int:
    """Upper bound on ``ThresholdResult.iterations`` for a bracket and tolerance."""
    width = bracket[1] - bracket[0]
    return max(math.ceil(math.log2(width / tol)), 0) + 2
