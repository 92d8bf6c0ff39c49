from __future__ import annotations

import numpy as np
import polars as pl
import pytest

from laasim.analysis import (
    compute_metrics,
    first_crossings,
    max_rocof,
    max_zonal_rocof,
    nadir,
    settling_frequency,
)
from laasim.dynamics import Trace
from tests.utils import ReturnT, create_frame_fixture


def _dip() -> dict[str, list]:
    time = np.round(np.arange(0.0, 20.05, 0.1), 10)
    since = np.clip(time - 1.0, 0.0, None)
    coi = np.round(np.maximum(50.0 - 0.1 * since, 49.6), 10)
    zone_a = np.round(np.maximum(50.0 - 0.05 * since, 49.8), 10)
    zone_b = np.round(np.maximum(50.0 - 0.2 * since, 49.4), 10)
    return {
        "time": time.tolist(),
        "coi_freq": coi.tolist(),
        "shed_mw": [0.0] * time.size,
        "f_A": zone_a.tolist(),
        "f_B": zone_b.tolist(),
    }


@create_frame_fixture
def dip() -> dict[str, list]:
    return _dip()


def test_max_rocof(dip: ReturnT) -> None:
    # 0.1 Hz/s on 50 Hz
    assert max_rocof(dip) == pytest.approx(-0.002)


def test_max_zonal_rocof(dip: ReturnT) -> None:
    zonal = max_zonal_rocof(dip)
    assert zonal.rocof == pytest.approx(-0.004)
    assert zonal.zone == "B"


def test_nadir_takes_first_occurrence(dip: ReturnT) -> None:
    low = nadir(dip)
    assert low.freq == pytest.approx(49.6)
    assert low.time == pytest.approx(5.0)


def test_settling_frequency(dip: ReturnT) -> None:
    assert settling_frequency(dip) == pytest.approx(49.6)
    with pytest.raises(ValueError, match="settling tail"):
        settling_frequency(dip, tail=25.0)


def test_first_crossings_are_strict(dip: ReturnT) -> None:
    crossings = first_crossings(dip)
    assert crossings[49.8] == pytest.approx(3.1)
    assert crossings[49.5] is None
    assert crossings[48.8] is None


def test_compute_metrics_row(dip: ReturnT) -> None:
    metrics = compute_metrics(dip)
    assert not metrics.ufls_triggered
    assert metrics.breaches(49.8)
    assert not metrics.breaches(49.5)
    row = metrics.as_row()
    assert row["nadir_hz"] == 49.6
    assert row["rocof_zone"] == "B"
    assert row["cross_49.8_s"] == pytest.approx(3.1)
    assert row["cross_49.5_s"] is None


def test_trace_and_frame_agree() -> None:
    data = _dip()
    trace = Trace.from_coi(data["time"], data["coi_freq"])
    from_trace = compute_metrics(trace)
    assert from_trace.max_rocof == pytest.approx(-0.002)
    assert from_trace.rocof_zone == "Z1"
    from_frame = compute_metrics(pl.DataFrame(data))
    assert from_trace.nadir == from_frame.nadir
    assert from_trace.settling_freq == pytest.approx(from_frame.settling_freq)


def test_shed_column_flags_ufls() -> None:
    data = _dip()
    data["shed_mw"] = [0.0] * 100 + [25.0] * (len(data["time"]) - 100)
    assert compute_metrics(pl.DataFrame(data)).ufls_triggered


def test_short_and_empty_traces() -> None:
    short = Trace.from_coi([0.0, 0.1, 0.2], [50.0, 49.9, 49.8])
    with pytest.raises(ValueError, match="shorter than"):
        max_rocof(short)
    with pytest.raises(ValueError, match="empty"):
        nadir(Trace.from_coi([], []))
