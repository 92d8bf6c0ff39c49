from .excursion import Band, ViolationReport, classify_excursion
from .policy import ProtectionPolicy
from .ufls import RelayState, RelayUpdate, apply_shedding, shed_per_zone, ufls_update

__all__ = [
    "Band",
    "ProtectionPolicy",
    "RelayState",
    "RelayUpdate",
    "ViolationReport",
    "apply_shedding",
    "classify_excursion",
    "shed_per_zone",
    "ufls_update",
]
