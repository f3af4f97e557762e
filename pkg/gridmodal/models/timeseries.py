"""
Time-domain result types.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    Output trajectories sampled on a uniform time grid.

    Attributes:
        t: Sample instants, s
        channels: Trajectory per output channel, in channel order
        units: Unit per channel ("rad/s", "Hz", "pu", "rad", ...)
    """

    t: np.ndarray
    channels: Dict[str, np.ndarray]
    units: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.t.ndim != 1 or len(self.t) < 2:
            raise ValueError("time grid needs at least two samples")
        if self.dt <= 0:
            raise ValueError(f"time step must be positive, got {self.dt}")
        for name, values in self.channels.items():
            if values.shape != self.t.shape:
                raise ValueError(
                    f"channel '{name}' has {values.shape[0]} samples, expected {len(self.t)}"
                )

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])

    @property
    def names(self) -> List[str]:
        return list(self.channels)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.channels[name]

    def in_hz(self) -> "TimeSeries":
        """Angular-speed channels converted to Hz and renamed with an ``_hz`` suffix."""
        channels: Dict[str, np.ndarray] = {}
        units: Dict[str, str] = {}
        for name, values in self.channels.items():
            if self.units.get(name) == "rad/s":
                channels[f"{name}_hz"] = values / (2.0 * math.pi)
                units[f"{name}_hz"] = "Hz"
            else:
                channels[name] = values
                units[name] = self.units.get(name, "")
        return TimeSeries(t=self.t, channels=channels, units=units)


@dataclass(frozen=True)
class RocofMetrics:
    """Windowed rate of change of frequency and frequency nadir after a power step."""

    rocof: Dict[float, float]
    nadir: float
    t_nadir: float

    def rows(self) -> List[Tuple[str, float]]:
        """Metric name/value pairs in report order."""
        rows = [
            (f"rocof_{round(window * 1000):d}ms", value) for window, value in self.rocof.items()
        ]
        rows.append(("nadir", self.nadir))
        rows.append(("t_nadir", self.t_nadir))
        return rows


@dataclass(frozen=True)
class GovernorModeResult:
    """
    Outcome of the differential governor-mode demonstration.

    Attributes:
        series: Pm1, Pm2, their difference and the governor-mode component
        eigenvalue: Governor-mode eigenvalue from modal analysis, 1/s
        weighted_time_constant: Inertia-weighted average of the governor time constants, s
        settling_time: 95 % settling time of the governor-mode component, s
        decay_rate: Decay rate fitted to the governor-mode component, 1/s
    """

    series: TimeSeries
    eigenvalue: Optional[float]
    weighted_time_constant: float
    settling_time: float
    decay_rate: float
