"""Single-stage under-frequency load-shedding relay."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, NamedTuple

import numpy as np
from loguru import logger

if TYPE_CHECKING:
    from laasim.dynamics.state import SystemState
    from laasim.grid.model import NetworkModel
    from laasim.protection.policy import ProtectionPolicy

_TIME_EPS = 1e-9


@dataclass(frozen=True)
class RelayState:
    below_since: float | None = None
    tripped: bool = False


class RelayUpdate(NamedTuple):
    relay: RelayState
    trip: bool


def ufls_update(
    policy: ProtectionPolicy,
    relay: RelayState,
    coi_freq: float,
    now: float,
) -> RelayUpdate:
    """Advance the relay to ``now``.

    The relay trips once the COI frequency has stayed at or below the threshold for
    ``ufls_confirm`` seconds, and stays latched for the rest of the run. ``trip`` is
    true only on the call that fires.
    """
    if relay.tripped:
        return RelayUpdate(relay, trip=False)
    if coi_freq > policy.ufls_threshold:
        return RelayUpdate(RelayState(), trip=False)

    below_since = now if relay.below_since is None else relay.below_since
    if now - below_since >= policy.ufls_confirm - _TIME_EPS:
        return RelayUpdate(RelayState(below_since, tripped=True), trip=True)
    return RelayUpdate(RelayState(below_since, tripped=False), trip=False)


def shed_per_zone(model: NetworkModel, policy: ProtectionPolicy) -> np.ndarray:
    """MW removed per zone.

    Each zone sheds ``shed_fraction`` of its base demand, capped by its own
    ``sheddable_fraction``.
    """
    fraction = np.minimum(
        policy.shed_fraction,
        np.array([z.sheddable_fraction for z in model.zones], dtype=float),
    )
    return fraction * model.demand


def apply_shedding(
    model: NetworkModel,
    state: SystemState,
    policy: ProtectionPolicy,
) -> SystemState:
    """Remove the shedding stage from base demand; attack load is never shed.

    A second call on a state that already shed is a no-op.
    """
    if state.shed_mw > 0.0:
        return state
    shed = shed_per_zone(model, policy)
    total = float(shed.sum())
    logger.info(f"UFLS shed {total:.1f} MW at t={state.time:.2f} s")
    return replace(
        state,
        base_load=np.maximum(state.base_load - shed, 0.0),
        shed_mw=total,
    )
