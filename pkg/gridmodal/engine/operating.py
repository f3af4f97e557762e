"""
Equilibrium solver and analytic linearization coefficients.

The unknowns of the two-machine equilibrium are the rotor-angle difference
and the load resistance; terminal voltages and the dispatch are fixed. The
load-bus quantities are recovered afterwards from the three-bus nodal solve.
"""

import cmath
import logging
import math
from typing import Tuple

from gridmodal.engine.netred import bus_voltages, electrical_power, reduced_coefficients
from gridmodal.errors import InfeasibleOperatingPointError
from gridmodal.models.network import Dispatch, NetworkParams, NetworkShape
from gridmodal.models.operating import (
    LinCoeffs,
    OperatingPoint,
    ReducedNetwork,
    SingleMachinePoint,
)

logger = logging.getLogger("gridmodal.engine.operating")

TOLERANCE = 1e-10
MAX_ITERATIONS = 50
MAX_STEP_HALVINGS = 30


def _partials(
    net: NetworkParams, red: ReducedNetwork, delta12: float, pe1: float, pe2: float
) -> LinCoeffs:
    V12 = net.V1 * net.V2
    sin_d, cos_d = math.sin(delta12), math.cos(delta12)
    scale = 1.0 / (red.Dcal * net.R_LD)
    return LinCoeffs(
        Klin1=V12 * (-red.G12 * sin_d + red.B12 * cos_d),
        Klin2=V12 * (-red.G12 * sin_d - red.B12 * cos_d),
        d1=scale * (pe1 * (red.Dcal - 2.0) + V12 / net.X * sin_d),
        d2=scale * (pe2 * (red.Dcal - 2.0) - V12 / net.X * sin_d),
    )


def _evaluate(
    shape: NetworkShape, delta12: float, R_LD: float
) -> Tuple[NetworkParams, ReducedNetwork, float, float]:
    net = shape.with_load(R_LD)
    red = reduced_coefficients(net)
    pe1, pe2 = electrical_power(red, net, delta12)
    return net, red, pe1, pe2


def solve_operating_point(
    netshape: NetworkShape,
    dispatch: Dispatch,
    tol: float = TOLERANCE,
    max_iterations: int = MAX_ITERATIONS,
) -> OperatingPoint:
    """
    Solve Pe1 = Pref1, Pe2 = Pref2 for the rotor-angle difference and load resistance.

    Newton iteration with the analytic Jacobian [[Klin1, d1], [Klin2, d2]],
    started from delta12 = 0 and R_LD = V1 V2 / (Pref1 + Pref2). The step is
    halved while the residual does not decrease.

    Args:
        netshape: Tie reactance, split point and terminal voltages
        dispatch: Generator setpoints
        tol: Convergence threshold on the largest power mismatch, pu
        max_iterations: Newton iteration limit

    Returns:
        The solved operating point

    Raises:
        InfeasibleOperatingPointError: If the iteration does not converge
    """
    delta, R = 0.0, netshape.V1 * netshape.V2 / dispatch.total
    net, red, pe1, pe2 = _evaluate(netshape, delta, R)
    mismatch = (pe1 - dispatch.Pref1, pe2 - dispatch.Pref2)
    norm = max(abs(mismatch[0]), abs(mismatch[1]))

    iterations = 0
    while norm >= tol:
        if iterations >= max_iterations:
            raise InfeasibleOperatingPointError(
                f"operating point did not converge in {max_iterations} iterations "
                f"(residual {norm:.3e} pu)",
                iterations=iterations,
                residual=norm,
            )
        iterations += 1

        lin = _partials(net, red, delta, pe1, pe2)
        det = lin.Klin1 * lin.d2 - lin.Klin2 * lin.d1
        if det == 0.0 or not math.isfinite(det):
            raise InfeasibleOperatingPointError(
                "singular Jacobian in the operating-point iteration",
                iterations=iterations,
                residual=norm,
            )
        # Cramer's rule keeps a symmetric case at delta12 = 0 exactly
        step_delta = (mismatch[0] * lin.d2 - lin.d1 * mismatch[1]) / det
        step_R = (lin.Klin1 * mismatch[1] - lin.Klin2 * mismatch[0]) / det

        scale = 1.0
        for _ in range(MAX_STEP_HALVINGS):
            trial_delta, trial_R = delta - scale * step_delta, R - scale * step_R
            if trial_R > 0.0 and abs(trial_delta) < math.pi:
                trial = _evaluate(netshape, trial_delta, trial_R)
                trial_mismatch = (trial[2] - dispatch.Pref1, trial[3] - dispatch.Pref2)
                trial_norm = max(abs(trial_mismatch[0]), abs(trial_mismatch[1]))
                if trial_norm < norm:
                    break
            scale *= 0.5
        else:
            raise InfeasibleOperatingPointError(
                f"operating-point line search stalled at residual {norm:.3e} pu; "
                "the dispatch is likely infeasible for this network strength",
                iterations=iterations,
                residual=norm,
            )

        delta, R = trial_delta, trial_R
        net, red, pe1, pe2 = trial
        mismatch, norm = trial_mismatch, trial_norm
        logger.debug(f"Newton iteration {iterations}: residual {norm:.3e}, step scale {scale}")

    if abs(delta) >= math.pi / 2:
        raise InfeasibleOperatingPointError(
            f"equilibrium angle {math.degrees(delta):.1f} deg lies beyond 90 deg",
            iterations=iterations,
            residual=norm,
        )

    V3 = bus_voltages(net, delta)[2]
    theta3 = cmath.phase(V3)
    op = OperatingPoint(
        delta12=delta,
        R_LD=R,
        V3=abs(V3),
        Pe1=pe1,
        Pe2=pe2,
        delta13=delta - theta3,
        delta23=-theta3,
        iterations=iterations,
    )
    logger.debug(
        f"Operating point after {iterations} iterations: R_LD={op.R_LD:.6f}, |V3|={op.V3:.6f}"
    )
    return op


def linearize(net: NetworkParams, op: OperatingPoint) -> LinCoeffs:
    """
    Analytic partial derivatives of the electrical powers at an equilibrium.

    Args:
        net: Network with the equilibrium load resistance
        op: Operating point solved on ``net``

    Returns:
        Klin1, Klin2 (pu/rad) and d1, d2 (pu/pu)
    """
    red = reduced_coefficients(net)
    return _partials(net, red, op.delta12, op.Pe1, op.Pe2)


def solve_single_operating_point(V1: float, X: float, Pref: float) -> SingleMachinePoint:
    """
    Equilibrium of one generator feeding a resistive load through a reactance.

    Solves Pref = V1^2 R / (R^2 + X^2) on the high-resistance branch.

    Raises:
        InfeasibleOperatingPointError: If Pref exceeds the maximum transferable power
    """
    if Pref <= 0:
        raise InfeasibleOperatingPointError(f"dispatch must be positive, got {Pref}")
    discriminant = V1**4 - 4.0 * Pref**2 * X**2
    if discriminant < 0:
        raise InfeasibleOperatingPointError(
            f"dispatch {Pref} pu exceeds the transfer limit {V1**2 / (2 * X):.4f} pu"
        )
    R = (V1**2 + math.sqrt(discriminant)) / (2.0 * Pref)
    impedance = math.hypot(R, X)
    return SingleMachinePoint(
        R_LD=R,
        V_load=V1 * R / impedance,
        load_angle=-math.atan2(X, R),
        Pe=V1**2 * R / impedance**2,
    )


def single_load_sensitivity(V1: float, X: float, R_LD0: float) -> float:
    """Derivative of V1^2 R / (R^2 + X^2) with respect to R at R_LD0."""
    return V1**2 * (X**2 - R_LD0**2) / (R_LD0**2 + X**2) ** 2
