from .metrics import (
    DEFAULT_LIMITS,
    FrequencyMetrics,
    Nadir,
    ZonalRocof,
    compute_metrics,
    first_crossings,
    max_rocof,
    max_zonal_rocof,
    nadir,
    settling_frequency,
)
from .sweep import (
    STUDIES,
    SweepCell,
    SweepRow,
    location_cells,
    placement_cells,
    render_table,
    run_cell,
    sizing_cells,
    static_dynamic_cells,
    sweep_tables,
    threshold_cells,
)
from .threshold import ThresholdResult, attack_for, find_min_laa, max_bisection_runs

__all__ = [
    "DEFAULT_LIMITS",
    "STUDIES",
    "FrequencyMetrics",
    "Nadir",
    "SweepCell",
    "SweepRow",
    "ThresholdResult",
    "ZonalRocof",
    "attack_for",
    "compute_metrics",
    "find_min_laa",
    "first_crossings",
    "location_cells",
    "max_bisection_runs",
    "max_rocof",
    "max_zonal_rocof",
    "nadir",
    "placement_cells",
    "render_table",
    "run_cell",
    "settling_frequency",
    "sizing_cells",
    "static_dynamic_cells",
    "sweep_tables",
    "threshold_cells",
]
