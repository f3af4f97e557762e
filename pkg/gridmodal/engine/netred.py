"""
Three-bus network reduction.

Builds the nodal admittance matrix of the two-generator, one-load network,
eliminates the load bus by Kron reduction and evaluates the closed-form
reduced coefficients, electrical powers and load voltage.
"""

import logging
import math
from typing import Tuple

import numpy as np

from gridmodal.errors import ReductionError
from gridmodal.models.network import NetworkParams
from gridmodal.models.operating import ReducedNetwork

logger = logging.getLogger("gridmodal.engine.netred")

PIVOT_TOLERANCE = 1e-12

# Bus ordering: generator #1, generator #2, load
LOAD_BUS = 2


def build_admittance(net: NetworkParams) -> np.ndarray:
    """
    Build the 3x3 nodal admittance matrix.

    Args:
        net: Network parameters

    Returns:
        Complex symmetric admittance matrix with buses ordered (1, 2, load)
    """
    y13 = -1j / (net.k * net.X)
    y23 = -1j / ((1.0 - net.k) * net.X)
    y_load = 1.0 / net.R_LD
    return np.array(
        [
            [y13, 0.0, -y13],
            [0.0, y23, -y23],
            [-y13, -y23, y13 + y23 + y_load],
        ],
        dtype=complex,
    )


def kron_reduce(Y: np.ndarray, node: int = LOAD_BUS) -> np.ndarray:
    """
    Eliminate one node: Y'ij = Yij - Yik Ykj / Ykk.

    Args:
        Y: Square admittance matrix
        node: Index of the node to eliminate

    Returns:
        Reduced admittance matrix

    Raises:
        ReductionError: If the pivot is numerically zero
    """
    Y = np.asarray(Y, dtype=complex)
    if Y.ndim != 2 or Y.shape[0] != Y.shape[1]:
        raise ReductionError(f"admittance matrix must be square, got shape {Y.shape}")
    scale = float(np.max(np.abs(Y))) if Y.size else 0.0
    pivot = Y[node, node]
    if scale == 0.0 or abs(pivot) < PIVOT_TOLERANCE * scale:
        raise ReductionError(f"singular pivot |Y[{node},{node}]| = {abs(pivot):.3e}")

    keep = [i for i in range(Y.shape[0]) if i != node]
    return Y[np.ix_(keep, keep)] - np.outer(Y[keep, node], Y[node, keep]) / pivot


def voltage_stiffness(net: NetworkParams) -> float:
    """The term (X k (k-1) / R_LD)^2 + 1 measuring the load-induced voltage sag."""
    return (net.X * net.k * (net.k - 1.0) / net.R_LD) ** 2 + 1.0


def reduced_coefficients(net: NetworkParams) -> ReducedNetwork:
    """
    Closed-form conductances and susceptances of the reduced network.

    Args:
        net: Network parameters

    Returns:
        ReducedNetwork with the six coefficients and the voltage-stiffness term
    """
    X, k, R = net.X, net.k, net.R_LD
    dcal = voltage_stiffness(net)
    return ReducedNetwork(
        G11=(1.0 - k) ** 2 / (R * dcal),
        B11=(1.0 - k - dcal) / (k * X * dcal),
        G12=k * (1.0 - k) / (R * dcal),
        B12=1.0 / (X * dcal),
        G22=k**2 / (R * dcal),
        B22=(k - dcal) / ((1.0 - k) * X * dcal),
        Dcal=dcal,
    )


def electrical_power(
    red: ReducedNetwork, net: NetworkParams, delta12: float
) -> Tuple[float, float]:
    """
    Electrical power delivered by each generator.

    Args:
        red: Reduced coefficients of ``net``
        net: Network parameters
        delta12: Rotor-angle difference, rad

    Returns:
        Tuple (Pe1, Pe2) in pu
    """
    V1, V2 = net.V1, net.V2
    cos_d, sin_d = math.cos(delta12), math.sin(delta12)
    pe1 = V1**2 * red.G11 + V1 * V2 * (red.G12 * cos_d + red.B12 * sin_d)
    pe2 = V2**2 * red.G22 + V1 * V2 * (red.G12 * cos_d - red.B12 * sin_d)

    if __debug__:
        check1, check2 = electrical_power_dcal_form(net, delta12)
        scale = max(1.0, V1 * V2 * red.B12, V1 * V2 * red.G12, V1**2 * red.G11, V2**2 * red.G22)
        assert abs(pe1 - check1) <= 1e-12 * scale, "Pe1 formulations disagree"
        assert abs(pe2 - check2) <= 1e-12 * scale, "Pe2 formulations disagree"
    return pe1, pe2


def electrical_power_dcal_form(net: NetworkParams, delta12: float) -> Tuple[float, float]:
    """Electrical powers written with the voltage-stiffness term factored out."""
    V1, V2, X, k, R = net.V1, net.V2, net.X, net.k, net.R_LD
    dcal = voltage_stiffness(net)
    cos_term = k * (1.0 - k) / R * math.cos(delta12)
    sin_term = math.sin(delta12) / X
    pe1 = V1 / dcal * (V1 * (1.0 - k) ** 2 / R + V2 * (cos_term + sin_term))
    pe2 = V2 / dcal * (V2 * k**2 / R + V1 * (cos_term - sin_term))
    return pe1, pe2


def load_voltage(net: NetworkParams, delta12: float) -> float:
    """
    Load-bus voltage magnitude from the power balance Pe1 + Pe2 = |V3|^2 / R_LD.

    Args:
        net: Network parameters
        delta12: Rotor-angle difference, rad

    Returns:
        |V3| in pu
    """
    V1, V2, k = net.V1, net.V2, net.k
    numerator = (
        V1**2 * (1.0 - k) ** 2 + V2**2 * k**2 + 2.0 * V1 * V2 * k * (1.0 - k) * math.cos(delta12)
    )
    return math.sqrt(numerator / voltage_stiffness(net))


def bus_voltages(net: NetworkParams, delta12: float) -> np.ndarray:
    """
    Complex bus voltages from the full three-bus nodal solve.

    Generator #2 is the angle reference: V1 = |V1| at delta12, V2 = |V2| at 0.

    Returns:
        Array [V1, V2, V3] of complex voltages
    """
    Y = build_admittance(net)
    V1 = net.V1 * complex(math.cos(delta12), math.sin(delta12))
    V2 = complex(net.V2, 0.0)
    V3 = -(Y[LOAD_BUS, 0] * V1 + Y[LOAD_BUS, 1] * V2) / Y[LOAD_BUS, LOAD_BUS]
    return np.array([V1, V2, V3], dtype=complex)
