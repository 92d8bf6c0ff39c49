"""Arrays the engine integrates, and the per-run mutable state."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from laasim.grid.matrix import build_coupling_matrix, solve_equilibrium
from laasim.protection.ufls import RelayState
from laasim.services.bess import BessState

if TYPE_CHECKING:
    from laasim.grid.model import EquilibriumDispatch, NetworkModel


@dataclass(frozen=True, eq=False)
class CompiledSystem:
    """Model parameters flattened to numpy arrays, built once per run.

    Per zone: ``inertia`` is ``2·H·S/f0`` (MW·s/Hz), ``hs`` is ``H·S`` (MVA·s),
    ``damping`` is ``D·S/f0`` (MW/Hz). Per generator: ``gov_gain`` is
    ``S/(droop·f0)`` (MW/Hz).
    """

    n_zones: int
    base_mva: float
    nominal_freq: float
    coupling: np.ndarray
    inertia: np.ndarray
    hs: np.ndarray
    damping: np.ndarray
    imports: np.ndarray
    demand: np.ndarray
    gen_zone: np.ndarray
    gov_gain: np.ndarray
    governor_tc: np.ndarray
    pm_max: np.ndarray
    equilibrium: EquilibriumDispatch

    @classmethod
    def from_model(cls, model: NetworkModel) -> CompiledSystem:
        n, f0 = model.n_zones, model.nominal_freq
        gens = model.generators
        gen_zone = np.array([model.zone_index[g.zone] for g in gens], dtype=int)
        rating = np.array([g.rating for g in model.generators], dtype=float)
        h = np.array([g.inertia_h for g in model.generators], dtype=float)
        d = np.array([g.damping for g in model.generators], dtype=float)
        droop = np.array([g.droop for g in model.generators], dtype=float)
        headroom = np.array([g.headroom for g in model.generators], dtype=float)

        hs = np.bincount(gen_zone, weights=h * rating, minlength=n)
        imports = np.zeros(n)
        for ic in model.interconnectors:
            imports[model.zone_index[ic.zone]] += ic.injection

        equilibrium = solve_equilibrium(model)
        return cls(
            n_zones=n,
            base_mva=model.base_mva,
            nominal_freq=f0,
            coupling=build_coupling_matrix(model),
            inertia=2.0 * hs / f0,
            hs=hs,
            damping=np.bincount(gen_zone, weights=d * rating, minlength=n) / f0,
            imports=imports,
            demand=model.demand.copy(),
            gen_zone=gen_zone,
            gov_gain=rating / (droop * f0),
            governor_tc=np.array([g.governor_tc for g in model.generators], dtype=float),
            pm_max=equilibrium.setpoints + headroom,
            equilibrium=equilibrium,
        )


@dataclass(frozen=True, eq=False)
class SystemState:
    """Snapshot of one run at ``time``.

    ``angle``, ``freq_dev`` and ``gov_power`` are integrated; the rest change only
    at step boundaries. ``base_load`` is demand after any shedding and
    ``attack_load`` the adversary's current load delta, both per zone in MW.
    """

    time: float
    angle: np.ndarray
    freq_dev: np.ndarray
    gov_power: np.ndarray
    base_load: np.ndarray
    attack_load: np.ndarray
    bess_states: tuple[BessState, ...] = ()
    bess_injection: np.ndarray = field(default_factory=lambda: np.zeros(0))
    relay: RelayState = field(default_factory=RelayState)
    shed_mw: float = 0.0

    @property
    def load(self) -> np.ndarray:
        return self.base_load + self.attack_load

    @property
    def ufls_latched(self) -> bool:
        return self.relay.tripped

    @classmethod
    def equilibrium(cls, model: NetworkModel, system: CompiledSystem) -> SystemState:
        """Pre-disturbance state: nominal frequency, balanced dispatch, idle BESS."""
        eq = system.equilibrium
        n = model.n_zones
        return cls(
            time=0.0,
            angle=eq.angles.copy(),
            freq_dev=np.zeros(n),
            gov_power=eq.setpoints.copy(),
            base_load=system.demand.copy(),
            attack_load=np.zeros(n),
            bess_states=tuple(BessState.initial(u) for u in model.bess_fleet),
            bess_injection=np.zeros(n),
        )
