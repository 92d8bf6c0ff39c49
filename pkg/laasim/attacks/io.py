"""Scenario documents: ``label``, ``steps``, optional ``adversary`` and ``protection``."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any, NamedTuple

from loguru import logger

from laasim.attacks.adversary import AdversaryPolicy, Strategy
from laasim.attacks.scenario import AttackScenario, AttackStep
from laasim.errors import ScenarioError
from laasim.protection.policy import ProtectionPolicy


class ScenarioDocument(NamedTuple):
    scenario: AttackScenario
    adversary: AdversaryPolicy | None
    protection: ProtectionPolicy


def _number(item: Mapping[str, Any], key: str, path: str) -> float:
    if key not in item:
        msg = f"{path}.{key}: missing required field"
        raise ScenarioError(msg)
    value = item[key]
    if isinstance(value, bool) or not isinstance(value, int | float):
        msg = f"{path}.{key}: expected a number, got {value!r}"
        raise ScenarioError(msg)
    return float(value)


def _count(item: Mapping[str, Any], key: str, path: str, default: int) -> int:
    value = item.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        msg = f"{path}.{key}: expected an integer, got {value!r}"
        raise ScenarioError(msg)
    return value


def _parse_adversary(item: Any) -> AdversaryPolicy:
    path = "adversary"
    if not isinstance(item, Mapping):
        msg = f"{path}: expected an object, got {type(item).__name__}"
        raise ScenarioError(msg)
    zones = item.get("vulnerable_zones", [])
    if not isinstance(zones, list) or not all(isinstance(z, str) for z in zones):
        msg = f"{path}.vulnerable_zones: expected a list of zone ids"
        raise ScenarioError(msg)
    raw_strategy = item.get("strategy", Strategy.LARGE_SCALE_STATIC.value)
    try:
        strategy = Strategy(raw_strategy)
    except ValueError:
        options = [s.value for s in Strategy]
        msg = f"{path}.strategy: expected one of {options}, got {raw_strategy!r}"
        raise ScenarioError(msg) from None
    return AdversaryPolicy(
        budget=_number(item, "budget_mw", path),
        vulnerable_zones=tuple(zones),
        strategy=strategy,
        impact_target=_number(item, "impact_target_hz", path),
        max_iterations=_count(item, "max_iterations", path, 10),
    )


def load_scenario(document: Mapping[str, Any] | str) -> ScenarioDocument:
    """Parse a scenario document (mapping or JSON text).

    Raises:
        ScenarioError: On malformed fields; the message names the field path.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            msg = f"invalid JSON: {e}"
            raise ScenarioError(msg) from e
    if not isinstance(document, Mapping):
        msg = "scenario document must be an object"
        raise ScenarioError(msg)

    raw_steps = document.get("steps", [])
    if not isinstance(raw_steps, list):
        msg = "steps: expected a list"
        raise ScenarioError(msg)
    steps = []
    for i, item in enumerate(raw_steps):
        path = f"steps[{i}]"
        zone = item.get("zone") if isinstance(item, Mapping) else None
        if not isinstance(zone, str) or not zone:
            msg = f"{path}.zone: expected a zone id"
            raise ScenarioError(msg)
        steps.append(
            AttackStep(
                _number(item, "time_s", path), zone, _number(item, "delta_mw", path)
            ),
        )
    steps.sort(key=lambda s: s.time)

    scenario = AttackScenario(tuple(steps), label=str(document.get("label", "scenario")))
    adversary = document.get("adversary")
    return ScenarioDocument(
        scenario=scenario,
        adversary=None if adversary is None else _parse_adversary(adversary),
        protection=ProtectionPolicy.from_document(document.get("protection")),
    )


def load_scenario_file(path: str | Path) -> ScenarioDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        msg = f"Cannot read scenario file {path}: {e.strerror}"
        raise OSError(e.errno, msg, str(path)) from e
    try:
        parsed = load_scenario(text)
    except ScenarioError as e:
        msg = f"{path}: {e}"
        raise ScenarioError(msg) from e
    scenario = parsed.scenario
    logger.info(f"Loaded scenario '{scenario.label}' with {len(scenario.steps)} step(s)")
    return parsed


def scenario_to_document(scenario: AttackScenario) -> dict[str, Any]:
    """Inverse of ``load_scenario`` for the label and steps."""
    return {
        "label": scenario.label,
        "steps": [
            {"time_s": s.time, "zone": s.zone, "delta_mw": s.delta}
            for s in scenario.steps
        ],
    }
