from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import matplotlib as mpl
from matplotlib.figure import Figure

if TYPE_CHECKING:
    from laasim.dynamics.trace import Trace

DEFAULT_LIMIT_LINES: tuple[float, ...] = (49.8, 49.5)


def plot_trace_svg(
    trace: Trace,
    path: Path | str,
    *,
    salt: str = "laasim",
    title: str | None = None,
    limit_lines: tuple[float, ...] = DEFAULT_LIMIT_LINES,
) -> Path:
    """Two stacked panels: COI frequency, then the attack load staircase.

    Every trace sample is plotted as is. A fixed hash salt and no date
    metadata make the SVG bytes a function of the trace alone.
    """
    path = Path(path)
    with mpl.rc_context(
        {"svg.hashsalt": salt, "path.simplify": False, "path.simplify_threshold": 0.0},
    ):
        _draw(trace, path, title=title, limit_lines=limit_lines)
    return path


def _draw(
    trace: Trace,
    path: Path,
    *,
    title: str | None,
    limit_lines: tuple[float, ...],
) -> None:
    # paths are built lazily, so the rc overrides must cover the whole draw
    fig = Figure(figsize=(8.0, 6.0))
    freq_ax, load_ax = fig.subplots(2, 1, sharex=True)

    freq_ax.plot(trace.time, trace.coi_freq, color="tab:blue", linewidth=1.0)
    for limit in limit_lines:
        freq_ax.axhline(limit, color="tab:red", linestyle="--", linewidth=0.6)
    freq_ax.set_ylabel("COI frequency [Hz]")
    freq_ax.grid(visible=True, linewidth=0.3)
    if title:
        freq_ax.set_title(title)

    load_ax.plot(
        trace.time,
        trace.attack_mw,
        drawstyle="steps-post",
        color="tab:orange",
        linewidth=1.0,
    )
    load_ax.set_ylabel("Attack load [MW]")
    load_ax.set_xlabel("Time [s]")
    load_ax.grid(visible=True, linewidth=0.3)

    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
