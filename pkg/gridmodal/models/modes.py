"""
Eigenstructure result types: modes, mode sets and sweep trajectories.
"""

import math
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np


class ModeLabel(str, Enum):
    """Physical interpretation of a mode."""

    SWING = "Swing"
    TURBINE_GOVERNOR = "TurbineGovernor"
    GOVERNOR = "Governor"
    REAL = "Real"
    UNCLASSIFIED = "Unclassified"


def natural_frequency_hz(eigenvalue: complex) -> float:
    """Oscillation frequency |Im(lambda)|/2pi."""
    return abs(eigenvalue.imag) / (2.0 * math.pi)


def damping_ratio(eigenvalue: complex) -> float:
    """Damping ratio -Re(lambda)/|lambda|, zero for a zero eigenvalue."""
    magnitude = abs(eigenvalue)
    if magnitude == 0.0:
        return 0.0
    return -eigenvalue.real / magnitude


@dataclass(frozen=True)
class Mode:
    """
    One eigenvalue of a linear model with its mode shape and participation.

    Complex modes store the representative with a non-negative imaginary part.
    """

    eigenvalue: complex
    shape: Dict[str, complex]
    participation: Dict[str, float]
    label: ModeLabel = ModeLabel.UNCLASSIFIED

    @property
    def is_complex(self) -> bool:
        return self.eigenvalue.imag != 0.0

    @property
    def freq_hz(self) -> float:
        return natural_frequency_hz(self.eigenvalue)

    @property
    def zeta(self) -> float:
        return damping_ratio(self.eigenvalue)

    @property
    def is_unstable(self) -> bool:
        return self.eigenvalue.real > 0.0

    @property
    def multiplicity(self) -> int:
        """Number of eigenvalues this mode stands for."""
        return 2 if self.is_complex else 1

    def group_participation(self, states: Sequence[str]) -> float:
        return float(sum(self.participation.get(state, 0.0) for state in states))

    def with_label(self, label: ModeLabel) -> "Mode":
        return replace(self, label=label)


@dataclass(frozen=True)
class ModeSet:
    """All modes of one model, sorted by (Re, |Im|)."""

    modes: Tuple[Mode, ...]
    state_labels: Tuple[str, ...]

    def __iter__(self) -> Iterator[Mode]:
        return iter(self.modes)

    def __len__(self) -> int:
        return len(self.modes)

    def __getitem__(self, index: int) -> Mode:
        return self.modes[index]

    @property
    def eigenvalue_count(self) -> int:
        """Number of eigenvalues, counting each complex pair twice."""
        return sum(mode.multiplicity for mode in self.modes)

    @property
    def labels(self) -> List[ModeLabel]:
        return [mode.label for mode in self.modes]

    def by_label(self, label: ModeLabel) -> List[Mode]:
        return [mode for mode in self.modes if mode.label == label]

    def first(self, label: ModeLabel) -> Optional[Mode]:
        matches = self.by_label(label)
        return matches[0] if matches else None

    def eigenvalues(self) -> np.ndarray:
        """All eigenvalues including the conjugate of every complex representative."""
        values: List[complex] = []
        for mode in self.modes:
            values.append(mode.eigenvalue)
            if mode.is_complex:
                values.append(mode.eigenvalue.conjugate())
        return np.array(values, dtype=complex)

    def relabeled(self, labels: Sequence[ModeLabel]) -> "ModeSet":
        return replace(
            self, modes=tuple(mode.with_label(label) for mode, label in zip(self.modes, labels))
        )


@dataclass(frozen=True)
class TrajectoryPoint:
    value: float
    eigenvalue: complex
    label: ModeLabel


@dataclass
class ModeTrajectory:
    """A mode followed by continuity across the grid of a parameter sweep."""

    id: int
    points: List[TrajectoryPoint] = field(default_factory=list)

    @property
    def label(self) -> ModeLabel:
        """Most frequent label along the trajectory, ties broken by first occurrence."""
        if not self.points:
            return ModeLabel.UNCLASSIFIED
        counts = Counter(point.label for point in self.points)
        best = max(counts.values())
        return next(point.label for point in self.points if counts[point.label] == best)

    @property
    def values(self) -> np.ndarray:
        return np.array([point.value for point in self.points])

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([point.eigenvalue for point in self.points], dtype=complex)

    @property
    def freq_hz(self) -> np.ndarray:
        return np.array([natural_frequency_hz(point.eigenvalue) for point in self.points])

    @property
    def zeta(self) -> np.ndarray:
        return np.array([damping_ratio(point.eigenvalue) for point in self.points])


@dataclass
class SweepResult:
    """
    Modal analysis repeated over a grid of one parameter.

    Attributes:
        parameter: Name of the swept parameter
        values: Grid of parameter values
        modesets: Mode set per grid point, None where the point failed
        failures: Error message per failed grid index
        trajectories: Modes traced by continuity along the grid
    """

    parameter: str
    values: np.ndarray
    modesets: List[Optional[ModeSet]]
    failures: Dict[int, str] = field(default_factory=dict)
    trajectories: List[ModeTrajectory] = field(default_factory=list)

    def mode_series(self, label: ModeLabel) -> Tuple[np.ndarray, List[Mode]]:
        """Grid values and the first mode carrying ``label`` at each successful point."""
        values: List[float] = []
        modes: List[Mode] = []
        for value, modeset in zip(self.values, self.modesets):
            if modeset is None:
                continue
            mode = modeset.first(label)
            if mode is not None:
                values.append(float(value))
                modes.append(mode)
        return np.array(values), modes
