from __future__ import annotations

import pytest

from laasim.analysis import (
    STUDIES,
    SweepCell,
    SweepRow,
    location_cells,
    placement_cells,
    render_table,
    sizing_cells,
    static_dynamic_cells,
    sweep_tables,
    threshold_cells,
)
from laasim.dynamics import SimulationConfig
from tests.utils import two_zone

CONFIG = SimulationConfig(dt=0.01, horizon=20.0)

CELLS = [
    SweepCell("metrics-A", "metrics", zone="A", magnitude=100.0),
    SweepCell("threshold-A", "threshold", zone="A", limits=(49.8,), bracket=(0.0, 400.0)),
    SweepCell("fleet-elsewhere", "metrics", zone="A", bess="dc-500", magnitude=100.0),
    SweepCell("unknown-zone", "metrics", zone="Q", magnitude=100.0),
]


@pytest.fixture(scope="module")
def rows() -> list[SweepRow]:
    return sweep_tables(two_zone(), CELLS, CONFIG, tol=5.0)


def test_rows_keep_cell_order(rows: list[SweepRow]) -> None:
    assert [row.cell.label for row in rows] == [cell.label for cell in CELLS]
    assert [row.ok for row in rows] == [True, True, False, False]


def test_failures_stay_on_their_row(rows: list[SweepRow]) -> None:
    assert "DanglingReferenceError" in rows[2].error
    assert "ScenarioError" in rows[3].error
    assert rows[3].as_rows() == [
        {
            "label": "unknown-zone",
            "bess": "none",
            "zone": "Q",
            "attack": "static",
            "error": rows[3].error,
        },
    ]


def test_metrics_and_threshold_rows(rows: list[SweepRow]) -> None:
    (metrics_row,) = rows[0].as_rows()
    assert metrics_row["laa_mw"] == 100.0
    assert metrics_row["nadir_hz"] < 50.0

    (threshold_row,) = rows[1].as_rows()
    assert threshold_row["limit_hz"] == 49.8
    assert 0.0 < threshold_row["min_laa_mw"] <= 400.0


def test_render_table(rows: list[SweepRow]) -> None:
    table = render_table(rows)
    for cell in CELLS:
        assert cell.label in table
    assert "min_laa_mw" in table
    assert render_table([]) == "(no rows)"


def test_parallel_sweep_matches_serial(rows: list[SweepRow]) -> None:
    parallel = sweep_tables(two_zone(), CELLS, CONFIG, tol=5.0, max_workers=2)
    assert [row.as_rows() for row in parallel] == [row.as_rows() for row in rows]


def test_empty_sweep() -> None:
    assert sweep_tables(two_zone(), [], CONFIG) == []


def test_study_builders() -> None:
    fleets = [c.bess for c in threshold_cells()]
    assert fleets == ["none", "dc-500", "dr-500", "paper-500"]
    assert [c.bess for c in sizing_cells()] == ["paper-400", "paper-500", "paper-600"]
    assert [c.zone for c in location_cells()] == ["Z8", "Z1", "Z15", "Z20", "Z27W"]
    assert {c.magnitude for c in location_cells()} == {880.68}
    assert [c.bess for c in placement_cells()] == ["paper-500", "colocated-500"]
    static, dynamic = static_dynamic_cells(660.0)
    assert (static.label, dynamic.label) == ("static-660", "dynamic-660")
    assert dynamic.dynamic
    assert not static.dynamic
    assert set(STUDIES) == {"threshold", "sizing", "location", "placement"}
