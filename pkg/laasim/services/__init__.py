from .bess import (
    BessState,
    BessUnit,
    FleetResponse,
    fleet_injection,
    make_unit,
    steady_state_injection,
    update_delivery,
)
from .curves import ServiceCurve, ServiceMode, default_curve, droop_target
from .presets import FLEET_PRESETS, fleet_preset

__all__ = [
    "FLEET_PRESETS",
    "BessState",
    "BessUnit",
    "FleetResponse",
    "ServiceCurve",
    "ServiceMode",
    "default_curve",
    "droop_target",
    "fleet_injection",
    "fleet_preset",
    "make_unit",
    "steady_state_injection",
    "update_delivery",
]
