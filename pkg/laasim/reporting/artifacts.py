"""Run artifacts on disk: trace CSV, event log, metrics document, run record."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING, Any

from loguru import logger

from laasim.attacks.io import scenario_to_document
from laasim.grid.io import serialize_network

if TYPE_CHECKING:
    from laasim.analysis.metrics import FrequencyMetrics
    from laasim.attacks.scenario import AttackScenario
    from laasim.dynamics.config import SimulationConfig
    from laasim.dynamics.trace import Trace
    from laasim.grid.model import NetworkModel
    from laasim.protection.excursion import ViolationReport
    from laasim.protection.policy import ProtectionPolicy

RUN_ID_LENGTH = 12


def _canonical(document: Any) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"), allow_nan=False)


def run_id(
    model: NetworkModel,
    scenario: AttackScenario,
    config: SimulationConfig,
    policy: ProtectionPolicy | None = None,
) -> str:
    """First 12 hex digits of the sha256 of the canonical JSON inputs.

    The network name is left out: two files holding the same network share ids.
    """
    document: dict[str, Any] = {
        "network": serialize_network(model),
        "scenario": scenario_to_document(scenario),
        "config": asdict(config),
    }
    if policy is not None:
        document["protection"] = asdict(policy)
    digest = hashlib.sha256(_canonical(document).encode("utf-8")).hexdigest()
    return digest[:RUN_ID_LENGTH]


@dataclass
class RunRecord:
    """Where the artifacts of one run live and when they were produced.

    Timestamps are kept in ``record.json`` only, never in the trace or the
    metrics document, so those stay byte-identical across repeats.
    """

    run_id: str
    out_dir: Path
    started_at: str = field(default_factory=lambda: _now())
    finished_at: str | None = None
    files: dict[str, Path] = field(default_factory=dict)

    @classmethod
    def create(cls, root: Path | str, identifier: str) -> RunRecord:
        out_dir = Path(root) / identifier
        out_dir.mkdir(parents=True, exist_ok=True)
        return cls(run_id=identifier, out_dir=out_dir)

    def path(self, name: str) -> Path:
        return self.out_dir / name

    def add(self, kind: str, path: Path) -> Path:
        self.files[kind] = path
        return path

    def finish(self) -> Path:
        """Stamp the end time and write ``record.json`` next to the artifacts."""
        self.finished_at = _now()
        document = {
            "run_id": self.run_id,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "files": {kind: p.name for kind, p in sorted(self.files.items())},
        }
        target = self.path("record.json")
        target.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        logger.info(f"Run {self.run_id} written to {self.out_dir}")
        return target


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def write_trace_csv(trace: Trace, path: Path | str, *, include_load: bool = True) -> Path:
    path = Path(path)
    trace.to_frame(include_load=include_load).write_csv(path)
    logger.debug(f"Trace with {len(trace)} samples written to {path}")
    return path


def write_events(trace: Trace, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(
        json.dumps(trace.events_document(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    return path


def metrics_document(
    metrics: FrequencyMetrics,
    report: ViolationReport | None = None,
    **extra: Any,
) -> dict[str, Any]:
    """JSON-ready metrics; float limit keys become strings like ``"49.8"``."""
    document: dict[str, Any] = {
        "max_rocof_pu_s": metrics.max_rocof,
        "max_zonal_rocof_pu_s": metrics.max_zonal_rocof,
        "rocof_zone": metrics.rocof_zone,
        "nadir_hz": metrics.nadir,
        "nadir_time_s": metrics.nadir_time,
        "settling_freq_hz": metrics.settling_freq,
        "ufls_triggered": metrics.ufls_triggered,
        "first_crossing_s": {f"{k:g}": v for k, v in metrics.first_crossing.items()},
    }
    if report is not None:
        document["excursion"] = {
            "band": report.band.value,
            "first_crossing_s": {b.value: t for b, t in report.first_crossing.items()},
            "rocof_violation": report.rocof_violation,
            "rocof_violations": {f"{k:g}": v for k, v in report.rocof_violations.items()},
            "min_freq_hz": report.min_freq,
            "max_freq_hz": report.max_freq,
        }
    document.update(extra)
    return document


def write_metrics(document: dict[str, Any], path: Path | str) -> Path:
    path = Path(path)
    text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    path.write_text(text, encoding="utf-8")
    return path
