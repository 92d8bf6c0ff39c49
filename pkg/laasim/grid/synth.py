"""Seeded synthetic analogue of the 36-zone GB transmission model."""

from __future__ import annotations

from itertools import combinations

import numpy as np
from loguru import logger

from laasim.grid.model import Interconnector, Line, NetworkModel, SyncGenerator, Zone
from laasim.grid.validation import validate_network

GB36_ZONE_IDS: tuple[str, ...] = (
    *(f"Z{i}" for i in range(1, 33)),
    "Z16A",
    "Z25A",
    "Z27W",
    "Z31E",
)
COASTAL_ZONES: tuple[str, ...] = ("Z1", "Z5", "Z9", "Z12", "Z17", "Z24", "Z28", "Z32")

N_LINES = 69
N_GENERATORS = 76
TOTAL_DEMAND_MW = 40_000.0
PEAK_ZONE, PEAK_DEMAND_MW = "Z8", 3669.5
NET_IMPORT_MW = 2_000.0
CAPACITY_FACTOR = 1.2
SUSCEPTANCE_RANGE = (5.0, 50.0)


def synthesize_gb36(seed: int = 1) -> NetworkModel:
    """Build a GB-36-like network that is a pure function of ``seed``.

    The topology is a ring over the 36 zones plus random chords up to 69 lines.
    Demand totals 40 GW with Z8 fixed at 3,669.5 MW as the largest zone. Every zone
    hosts two synchronous machines (four random zones host three), all with H = 5 s,
    sized to 1.2 times the demand not covered by the 2 GW of imports.
    """
    rng = np.random.default_rng(seed)
    n = len(GB36_ZONE_IDS)
    peak = GB36_ZONE_IDS.index(PEAK_ZONE)

    weights = rng.uniform(0.35, 1.0, n - 1)
    others = weights / weights.sum() * (TOTAL_DEMAND_MW - PEAK_DEMAND_MW)
    demand = np.insert(np.round(others, 1), peak, PEAK_DEMAND_MW)
    zones = tuple(
        Zone(zone_id, float(d)) for zone_id, d in zip(GB36_ZONE_IDS, demand, strict=True)
    )

    ring = [(i, (i + 1) % n) for i in range(n)]
    ring_set = {frozenset(pair) for pair in ring}
    candidates = [
        pair for pair in combinations(range(n), 2) if frozenset(pair) not in ring_set
    ]
    chosen = rng.choice(len(candidates), N_LINES - n, replace=False)
    pairs = ring + [candidates[k] for k in sorted(chosen)]
    susceptance = np.round(rng.uniform(*SUSCEPTANCE_RANGE, len(pairs)), 2)
    lines = tuple(
        Line(
            GB36_ZONE_IDS[a],
            GB36_ZONE_IDS[b],
            float(b_pu),
            rating=round(float(b_pu) * 100.0 * 0.35, 1),
        )
        for (a, b), b_pu in zip(pairs, susceptance, strict=True)
    )

    units_per_zone = np.full(n, 2)
    units_per_zone[rng.choice(n, N_GENERATORS - 2 * n, replace=False)] += 1
    total_capacity = CAPACITY_FACTOR * (TOTAL_DEMAND_MW - NET_IMPORT_MW)
    share = rng.uniform(0.4, 1.6, n)
    zone_capacity = share / share.sum() * total_capacity
    generators = []
    for idx, zone_id in enumerate(GB36_ZONE_IDS):
        rating = round(float(zone_capacity[idx] / units_per_zone[idx]), 1)
        for _ in range(units_per_zone[idx]):
            generators.append(
                SyncGenerator(
                    id=f"G{len(generators) + 1}",
                    zone=zone_id,
                    rating=rating,
                    headroom=round(0.1 * rating, 1),
                ),
            )

    per_link = NET_IMPORT_MW / len(COASTAL_ZONES)
    interconnectors = tuple(Interconnector(zone, per_link) for zone in COASTAL_ZONES)

    model = NetworkModel(
        zones=zones,
        lines=lines,
        generators=tuple(generators),
        interconnectors=interconnectors,
        name=f"gb36-seed{seed}",
    )
    logger.info(
        f"Synthesized GB-36 analogue (seed={seed}): {model.total_demand:.1f} MW demand, "
        f"{model.generation_capacity:.1f} MVA synchronous capacity",
    )
    return validate_network(model)
