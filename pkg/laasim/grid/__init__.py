from importlib.resources import files

from .io import (
    dump_network,
    load_network,
    load_network_file,
    parse_network,
    serialize_network,
)
from .matrix import build_coupling_matrix, solve_equilibrium
from .model import (
    EquilibriumDispatch,
    Interconnector,
    Line,
    NetworkModel,
    SyncGenerator,
    Zone,
)
from .synth import GB36_ZONE_IDS, synthesize_gb36
from .validation import build_check_suites, validate_network

GB36_FIXTURE = files("laasim") / "data" / "gb36-synthetic.json"


def load_gb36() -> NetworkModel:
    """Load the shipped, hand-calibrated GB-36 analogue."""
    return load_network(GB36_FIXTURE.read_text(encoding="utf-8"), name="gb36-synthetic")


__all__ = [
    "GB36_FIXTURE",
    "GB36_ZONE_IDS",
    "EquilibriumDispatch",
    "Interconnector",
    "Line",
    "NetworkModel",
    "SyncGenerator",
    "Zone",
    "build_check_suites",
    "build_coupling_matrix",
    "dump_network",
    "load_gb36",
    "load_network",
    "load_network_file",
    "parse_network",
    "serialize_network",
    "solve_equilibrium",
    "synthesize_gb36",
    "validate_network",
]
