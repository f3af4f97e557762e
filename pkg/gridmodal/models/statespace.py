"""
Labeled linear state-space model.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, Sequence, Tuple

import numpy as np

from gridmodal.errors import AssemblyError, ChannelError


@dataclass(frozen=True, eq=False)
class StateSpaceModel:
    """
    Linear model dx/dt = A x + B u, y = C x + D u with named channels.

    Attributes:
        A, B, C, D: System matrices
        state_labels: Names of the states, in matrix order
        input_labels: Names of the inputs, in matrix order
        output_labels: Names of the outputs, in matrix order
        inertia: Angular momentum of the machine behind each speed state
        name: Free-form description, usually the scenario name
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    state_labels: Tuple[str, ...]
    input_labels: Tuple[str, ...]
    output_labels: Tuple[str, ...]
    inertia: Dict[str, float] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self) -> None:
        n, m, p = len(self.state_labels), len(self.input_labels), len(self.output_labels)
        expected = {"A": (n, n), "B": (n, m), "C": (p, n), "D": (p, m)}
        for key, shape in expected.items():
            matrix = getattr(self, key)
            if matrix.shape != shape:
                raise AssemblyError(f"{key} has shape {matrix.shape}, expected {shape}")
            if not np.all(np.isfinite(matrix)):
                raise AssemblyError(f"{key} contains non-finite entries")
        for labels in (self.state_labels, self.input_labels, self.output_labels):
            if len(set(labels)) != len(labels):
                raise AssemblyError(f"duplicate channel labels in {labels}")

    @property
    def n_states(self) -> int:
        return len(self.state_labels)

    @property
    def speed_states(self) -> Tuple[str, ...]:
        return tuple(label for label in self.state_labels if label.startswith("omega"))

    @property
    def governor_states(self) -> Tuple[str, ...]:
        return tuple(label for label in self.state_labels if label.startswith("Pm"))

    def state_index(self, label: str) -> int:
        try:
            return self.state_labels.index(label)
        except ValueError:
            available = ", ".join(self.state_labels)
            raise ChannelError(f"unknown state '{label}'; available: {available}")

    def input_index(self, label: str) -> int:
        try:
            return self.input_labels.index(label)
        except ValueError:
            available = ", ".join(self.input_labels)
            raise ChannelError(f"unknown input '{label}'; available: {available}")

    def output_index(self, label: str) -> int:
        try:
            return self.output_labels.index(label)
        except ValueError:
            raise ChannelError(
                f"unknown output '{label}'; available: {', '.join(self.output_labels)}"
            )

    def select_outputs(self, labels: Sequence[str]) -> "StateSpaceModel":
        """Restrict the model to a subset of its outputs, in the given order."""
        rows = [self.output_index(label) for label in labels]
        return replace(self, C=self.C[rows, :], D=self.D[rows, :], output_labels=tuple(labels))


@dataclass(frozen=True)
class SecondOrderSummary:
    """Natural frequency and damping of a second-order turbine-governor loop."""

    fn: float
    zeta: float
    critically_damped: bool
