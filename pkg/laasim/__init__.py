from importlib.metadata import PackageNotFoundError, version

from laasim.analysis import compute_metrics, find_min_laa, sweep_tables
from laasim.attacks import AttackScenario, dynamic_laa, static_laa
from laasim.check import CheckSuite
from laasim.dynamics import SimulationConfig, Trace, run
from laasim.grid import NetworkModel, load_gb36, load_network, synthesize_gb36
from laasim.protection import ProtectionPolicy, classify_excursion

try:
    __version__ = version("laasim")
except PackageNotFoundError:  # running from a source checkout
    __version__ = "0.0.0"

__all__ = [
    "AttackScenario",
    "CheckSuite",
    "NetworkModel",
    "ProtectionPolicy",
    "SimulationConfig",
    "Trace",
    "classify_excursion",
    "compute_metrics",
    "dynamic_laa",
    "find_min_laa",
    "load_gb36",
    "load_network",
    "run",
    "static_laa",
    "sweep_tables",
    "synthesize_gb36",
]
