"""Operating bands, RoCoF limits and the load-shedding relay settings."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, fields
from typing import Any

from laasim.errors import ScenarioError

NOMINAL_FREQ_HZ = 50.0


@dataclass(frozen=True)
class ProtectionPolicy:
    """Protection settings; defaults follow the GB operating standards.

    Attributes:
        normal_band: Half-width in Hz of normal operation around nominal.
        statutory_band: Half-width in Hz of the statutory limits.
        ufls_threshold: COI frequency in Hz at or below which load shedding arms.
        shed_fraction: Share of base demand removed by the single shedding stage.
        ufls_confirm: Seconds the frequency must stay at or below the threshold.
        rocof_limit: RoCoF limit in p.u./s (0.0025 p.u./s is 0.125 Hz/s).
        rocof_window: Measurement window in seconds; a violation must outlast it.
        relaxed_rocof_limits: Relaxed loss-of-mains settings reported alongside.
    """

    normal_band: float = 0.2
    statutory_band: float = 0.5
    ufls_threshold: float = 48.8
    shed_fraction: float = 0.05
    ufls_confirm: float = 0.1
    rocof_limit: float = 0.0025
    rocof_window: float = 0.5
    relaxed_rocof_limits: tuple[float, ...] = (0.01, 0.02)

    def __post_init__(self) -> None:
        if not self.ufls_threshold < NOMINAL_FREQ_HZ - self.statutory_band:
            msg = (
                f"ufls_threshold {self.ufls_threshold} Hz must lie below the statutory "
                f"band ({NOMINAL_FREQ_HZ - self.statutory_band} Hz)."
            )
            raise ValueError(msg)
        if not 0 < self.shed_fraction < 1:
            msg = f"shed_fraction must be in (0, 1), got {self.shed_fraction}."
            raise ValueError(msg)
        if not 0 < self.normal_band < self.statutory_band:
            msg = "Expected 0 < normal_band < statutory_band."
            raise ValueError(msg)
        if self.ufls_confirm < 0 or self.rocof_window <= 0 or self.rocof_limit <= 0:
            msg = "ufls_confirm must be >= 0; rocof_window and rocof_limit must be > 0."
            raise ValueError(msg)

    @property
    def rocof_limits(self) -> tuple[float, ...]:
        """Primary limit followed by the relaxed ones."""
        return (self.rocof_limit, *self.relaxed_rocof_limits)

    @classmethod
    def from_document(cls, document: Mapping[str, Any] | None) -> ProtectionPolicy:
        """Policy from the ``protection`` key of a scenario document.

        Raises:
            ScenarioError: On unknown keys or values the policy rejects.
        """
        if not document:
            return cls()
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(document) - known)
        if unknown:
            msg = (
                f"protection: unknown key(s) {unknown}; "
                f"expected a subset of {sorted(known)}."
            )
            raise ScenarioError(msg)
        values = dict(document)
        if "relaxed_rocof_limits" in values:
            values["relaxed_rocof_limits"] = tuple(values["relaxed_rocof_limits"])
        try:
            return cls(**values)
        except (TypeError, ValueError) as e:
            msg = f"protection: {e}"
            raise ScenarioError(msg) from e
