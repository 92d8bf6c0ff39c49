from .config import SimulationConfig
from .engine import StateDerivative, coi_frequency, derivatives, run, step
from .state import CompiledSystem, SystemState
from .trace import Trace, TraceEvent

__all__ = [
    "CompiledSystem",
    "SimulationConfig",
    "StateDerivative",
    "SystemState",
    "Trace",
    "TraceEvent",
    "coi_frequency",
    "derivatives",
    "run",
    "step",
]
