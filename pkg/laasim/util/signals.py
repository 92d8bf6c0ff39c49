from __future__ import annotations

from typing import TYPE_CHECKING, Any

import narwhals as nw
import numpy as np

if TYPE_CHECKING:
    from narwhals.dataframe import DataFrame
    from narwhals.typing import IntoFrame

_TIME_EPS = 1e-9


def trace_frame(data: Any) -> DataFrame[Any]:
    """Narwhals frame for a ``Trace`` or any native frame with trace columns."""
    if isinstance(data, nw.DataFrame):
        return data
    to_frame = getattr(data, "to_frame", None)
    native: IntoFrame = to_frame() if callable(to_frame) else data
    frame = nw.from_native(native)
    if isinstance(frame, nw.LazyFrame):
        return frame.collect()
    return frame


def column(frame: DataFrame[Any], name: str) -> np.ndarray:
    return np.asarray(frame.get_column(name).to_numpy(), dtype=float)


def windowed_slope(
    time: np.ndarray,
    values: np.ndarray,
    window: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Slope ``(v(t + window) - v(t)) / window`` wherever ``t + window`` is recorded.

    ``values`` may be 2-D with one column per signal.

    Raises:
        ValueError: If the record is shorter than ``window``.
    """
    end = np.searchsorted(time, time + window - _TIME_EPS)
    valid = np.nonzero(end < len(time))[0]
    if valid.size == 0:
        record = float(time[-1] - time[0]) if len(time) else 0.0
        msg = f"Trace span {record:.3f} s is shorter than the {window} s window."
        raise ValueError(msg)
    stop = end[valid]
    span = time[stop] - time[valid]
    if values.ndim == 2:
        span = span[:, None]
    return time[valid], (values[stop] - values[valid]) / span


def longest_run(mask: np.ndarray, time: np.ndarray) -> float:
    """Duration in seconds of the longest contiguous run of ``True`` in ``mask``."""
    if not mask.any():
        return 0.0
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.nonzero(edges == 1)[0]
    stops = np.nonzero(edges == -1)[0] - 1
    return float(np.max(time[stops] - time[starts]))


def signed_peak(values: np.ndarray) -> float:
    """Entry of largest magnitude, keeping its sign; the first one wins ties."""
    if values.size == 0:
        return 0.0
    flat = values.ravel()
    return float(flat[int(np.argmax(np.abs(flat)))])
