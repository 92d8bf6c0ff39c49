from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SimulationConfig:
    """Fixed-step integration settings.

    Attributes:
        dt: Integration step in seconds.
        horizon: Simulated time span in seconds.
        sample_every: Integration steps between two trace samples.
    """

    dt: float = 0.01
    horizon: float = 180.0
    sample_every: int = 1

    def __post_init__(self) -> None:
        if not self.dt > 0:
            msg = f"dt must be positive, got {self.dt}."
            raise ValueError(msg)
        if self.horizon < self.dt:
            msg = f"horizon ({self.horizon}) must be at least dt ({self.dt})."
            raise ValueError(msg)
        if self.sample_every < 1:
            msg = f"sample_every must be >= 1, got {self.sample_every}."
            raise ValueError(msg)

    @property
    def n_steps(self) -> int:
        return round(self.horizon / self.dt)
