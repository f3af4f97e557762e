"""
Result types of the network reduction and the equilibrium solver.

Angles are stored in radians; reports convert them to degrees.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ReducedNetwork:
    """Kron-reduced 2x2 admittance coefficients and the voltage-stiffness term."""

    G11: float
    B11: float
    G12: float
    B12: float
    G22: float
    B22: float
    Dcal: float

    def matrix(self) -> np.ndarray:
        """The reduced admittance matrix as a complex array."""
        y12 = complex(self.G12, self.B12)
        return np.array(
            [[complex(self.G11, self.B11), y12], [y12, complex(self.G22, self.B22)]],
            dtype=complex,
        )


@dataclass(frozen=True)
class OperatingPoint:
    """Solved equilibrium of the two-machine network."""

    delta12: float
    R_LD: float
    V3: float
    Pe1: float
    Pe2: float
    delta13: float
    delta23: float
    iterations: int = 0

    @property
    def load_conductance(self) -> float:
        return 1.0 / self.R_LD

    @property
    def load_power(self) -> float:
        return self.Pe1 + self.Pe2

    @property
    def delta12_deg(self) -> float:
        return math.degrees(self.delta12)

    @property
    def delta13_deg(self) -> float:
        return math.degrees(self.delta13)

    @property
    def delta23_deg(self) -> float:
        return math.degrees(self.delta23)


@dataclass(frozen=True)
class SingleMachinePoint:
    """Equilibrium of one generator feeding a resistive load through a reactance."""

    R_LD: float
    V_load: float
    load_angle: float
    Pe: float

    @property
    def load_conductance(self) -> float:
        return 1.0 / self.R_LD


@dataclass(frozen=True)
class LinCoeffs:
    """Partial derivatives of the electrical powers at the equilibrium."""

    Klin1: float
    Klin2: float
    d1: float
    d2: float
