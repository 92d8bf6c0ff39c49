"""JSON network documents: parsing with field paths, serialization, files."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any, TypedDict

from loguru import logger

from laasim.errors import SchemaError
from laasim.grid.model import (
    BASE_MVA,
    NOMINAL_FREQ_HZ,
    Interconnector,
    Line,
    NetworkModel,
    SyncGenerator,
    Zone,
)
from laasim.grid.validation import validate_network
from laasim.services.bess import BessUnit
from laasim.services.curves import FULL_DEVIATION_HZ, ServiceCurve, ServiceMode


class BessDocument(TypedDict):
    id: str
    zone: str
    rating_mw: float
    mode: str
    deadband_hz: float
    full_deviation_hz: float
    activation_delay_s: float
    full_delivery_s: float
    energy_capacity_mwh: float | None
    symmetric: bool


_MISSING = object()


def _bess_document(unit: BessUnit) -> BessDocument:
    return BessDocument(
        id=unit.id,
        zone=unit.zone,
        rating_mw=unit.rating,
        mode=unit.mode.value,
        deadband_hz=unit.curve.deadband,
        full_deviation_hz=unit.curve.full_deviation,
        activation_delay_s=unit.activation_delay,
        full_delivery_s=unit.full_delivery_time,
        energy_capacity_mwh=unit.energy_capacity,
        symmetric=unit.curve.symmetric,
    )


def _field(item: Mapping[str, Any], key: str, path: str, default: Any = _MISSING) -> Any:
    if key not in item:
        if default is _MISSING:
            raise SchemaError(f"{path}.{key}", "missing required field")
        return default
    return item[key]


def _number(
    item: Mapping[str, Any], key: str, path: str, default: Any = _MISSING
) -> float:
    value = _field(item, key, path, default)
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise SchemaError(f"{path}.{key}", f"expected a number, got {value!r}")
    return float(value)


def _text(
    item: Mapping[str, Any], key: str, path: str, default: Any = _MISSING
) -> str:
    value = _field(item, key, path, default)
    if not isinstance(value, str) or not value:
        raise SchemaError(f"{path}.{key}", f"expected a non-empty string, got {value!r}")
    return value


def _flag(
    item: Mapping[str, Any], key: str, path: str, default: Any = _MISSING
) -> bool:
    value = _field(item, key, path, default)
    if not isinstance(value, bool):
        raise SchemaError(f"{path}.{key}", f"expected true or false, got {value!r}")
    return value


def _records(
    document: Mapping[str, Any], key: str, *, required: bool
) -> list[Mapping[str, Any]]:
    if key not in document:
        if required:
            raise SchemaError(key, "missing required field")
        return []
    records = document[key]
    if not isinstance(records, list):
        raise SchemaError(key, f"expected a list, got {type(records).__name__}")
    for i, record in enumerate(records):
        if not isinstance(record, Mapping):
            raise SchemaError(f"{key}[{i}]", "expected an object")
    return records


def _parse_bess(item: Mapping[str, Any], path: str, index: int) -> BessUnit:
    raw_mode = _text(item, "mode", path)
    try:
        mode = ServiceMode(raw_mode)
    except ValueError:
        modes = [m.value for m in ServiceMode]
        msg = f"expected one of {modes}, got {raw_mode!r}"
        raise SchemaError(f"{path}.mode", msg) from None

    zone = _text(item, "zone", path)
    capacity = _field(item, "energy_capacity_mwh", path, None)
    if capacity is not None:
        capacity = _number(item, "energy_capacity_mwh", path)
    curve = ServiceCurve(
        deadband=_number(item, "deadband_hz", path, 0.015),
        full_deviation=_number(item, "full_deviation_hz", path, FULL_DEVIATION_HZ[mode]),
        symmetric=_flag(item, "symmetric", path, True),
    )
    return BessUnit(
        id=_text(item, "id", path, f"{mode.value}-{zone}-{index + 1}"),
        zone=zone,
        rating=_number(item, "rating_mw", path),
        mode=mode,
        curve=curve,
        activation_delay=_number(item, "activation_delay_s", path, 0.5),
        full_delivery_time=_number(item, "full_delivery_s", path, 1.0),
        energy_capacity=capacity,
    )


def parse_network(document: Mapping[str, Any], name: str = "network") -> NetworkModel:
    """Build a model from a document without running the network checks."""
    if not isinstance(document, Mapping):
        raise SchemaError("<root>", "expected an object")

    zone_records = _records(document, "zones", required=True)
    if not zone_records:
        raise SchemaError("zones", "at least one zone is required")

    zones = tuple(
        Zone(
            id=_text(z, "id", f"zones[{i}]"),
            demand=_number(z, "demand", f"zones[{i}]"),
            sheddable_fraction=_number(z, "sheddable_fraction", f"zones[{i}]", 0.05),
        )
        for i, z in enumerate(zone_records)
    )
    lines = tuple(
        Line(
            from_zone=_text(ln, "from", f"lines[{i}]"),
            to_zone=_text(ln, "to", f"lines[{i}]"),
            susceptance=_number(ln, "susceptance", f"lines[{i}]"),
            rating=_number(ln, "rating", f"lines[{i}]", 0.0),
        )
        for i, ln in enumerate(_records(document, "lines", required=True))
    )
    generators = tuple(
        SyncGenerator(
            id=_text(g, "id", f"generators[{i}]", f"G{i + 1}"),
            zone=_text(g, "zone", f"generators[{i}]"),
            rating=_number(g, "rating", f"generators[{i}]"),
            inertia_h=_number(g, "inertia_h", f"generators[{i}]", 5.0),
            droop=_number(g, "droop", f"generators[{i}]", 0.05),
            governor_tc=_number(g, "governor_tc", f"generators[{i}]", 8.0),
            headroom=_number(g, "headroom", f"generators[{i}]", 0.0),
            damping=_number(g, "damping", f"generators[{i}]", 1.0),
        )
        for i, g in enumerate(_records(document, "generators", required=True))
    )
    interconnectors = tuple(
        Interconnector(
            zone=_text(ic, "zone", f"interconnectors[{i}]"),
            injection=_number(ic, "injection", f"interconnectors[{i}]"),
        )
        for i, ic in enumerate(_records(document, "interconnectors", required=False))
    )
    bess = tuple(
        _parse_bess(b, f"bess[{i}]", i)
        for i, b in enumerate(_records(document, "bess", required=False))
    )
    return NetworkModel(
        zones=zones,
        lines=lines,
        generators=generators,
        interconnectors=interconnectors,
        bess_fleet=bess,
        base_mva=_number(document, "base_mva", "<root>", BASE_MVA),
        nominal_freq=_number(document, "nominal_freq", "<root>", NOMINAL_FREQ_HZ),
        name=name,
    )


def load_network(
    document: Mapping[str, Any] | str, name: str = "network"
) -> NetworkModel:
    """Parse and validate a network document (mapping or JSON text).

    Raises:
        SchemaError: If a field is missing or mistyped; the message names the path.
        NetworkValidationError: If the parsed model breaks a network invariant.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise SchemaError("<root>", f"invalid JSON: {e}") from e
    model = validate_network(parse_network(document, name=name))  # type: ignore[arg-type]
    logger.info(
        f"Loaded network '{name}': {model.n_zones} zones, {len(model.lines)} lines, "
        f"demand {model.total_demand:.1f} MW",
    )
    return model


def load_network_file(path: str | Path) -> NetworkModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        msg = f"Cannot read network file {path}: {e.strerror}"
        raise OSError(e.errno, msg, str(path)) from e
    try:
        return load_network(text, name=path.stem)
    except SchemaError as e:
        raise SchemaError(f"{path}:{e.field}", e.reason) from e


def serialize_network(model: NetworkModel) -> dict[str, Any]:
    """Inverse of ``load_network``; keys follow the network document schema."""
    return {
        "base_mva": model.base_mva,
        "nominal_freq": model.nominal_freq,
        "zones": [
            {"id": z.id, "demand": z.demand, "sheddable_fraction": z.sheddable_fraction}
            for z in model.zones
        ],
        "lines": [
            {
                "from": ln.from_zone,
                "to": ln.to_zone,
                "susceptance": ln.susceptance,
                "rating": ln.rating,
            }
            for ln in model.lines
        ],
        "generators": [
            {
                "id": g.id,
                "zone": g.zone,
                "rating": g.rating,
                "inertia_h": g.inertia_h,
                "droop": g.droop,
                "governor_tc": g.governor_tc,
                "headroom": g.headroom,
                "damping": g.damping,
            }
            for g in model.generators
        ],
        "interconnectors": [
            {"zone": ic.zone, "injection": ic.injection} for ic in model.interconnectors
        ],
        "bess": [_bess_document(u) for u in model.bess_fleet],
    }


def dump_network(model: NetworkModel, path: str | Path) -> Path:
    """Write the model as indented JSON with a trailing newline."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(serialize_network(model), indent=2) + "\n"
    path.write_text(text, encoding="utf-8")
    logger.info(f"Network written to {path}")
    return path
