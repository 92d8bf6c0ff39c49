from .artifacts import (
    RunRecord,
    metrics_document,
    run_id,
    write_events,
    write_metrics,
    write_trace_csv,
)
from .plot import plot_trace_svg

__all__ = [
    "RunRecord",
    "metrics_document",
    "plot_trace_svg",
    "run_id",
    "write_events",
    "write_metrics",
    "write_trace_csv",
]
