"""
Per-unit and SI conversions of machine parameters and the short-circuit ratio.

Machine parameters are given in pu on the machine rating S_n = S_pu * Sbase.
With Sbase = 1 every converted quantity is on the system pu base.
"""

from gridmodal.models.machine import BaseSystem


def _rating(S_pu: float, base: BaseSystem) -> float:
    if S_pu <= 0:
        raise ValueError(f"machine rating must be positive, got {S_pu}")
    return S_pu * base.Sbase


def momentum(H: float, S_pu: float, base: BaseSystem) -> float:
    """
    Angular momentum M = 2 H S_n / omega_b.

    Args:
        H: Inertia constant, s
        S_pu: Machine rating as a fraction of Sbase
        base: System base

    Returns:
        Angular momentum in power s^2/rad
    """
    if H < 0:
        raise ValueError(f"inertia constant must be non-negative, got {H}")
    return 2.0 * H * _rating(S_pu, base) / base.omega_b


def inertia_constant(M: float, S_pu: float, base: BaseSystem) -> float:
    """Inverse of :func:`momentum`."""
    return M * base.omega_b / (2.0 * _rating(S_pu, base))


def damping_si(D_pu: float, S_pu: float, base: BaseSystem) -> float:
    """Damping D = D_pu S_n / omega_b, in power per rad/s."""
    return D_pu * _rating(S_pu, base) / base.omega_b


def damping_pu(D: float, S_pu: float, base: BaseSystem) -> float:
    """Inverse of :func:`damping_si`."""
    return D * base.omega_b / _rating(S_pu, base)


def droop_si(R_pu: float, S_pu: float, base: BaseSystem) -> float:
    """Droop R = R_pu omega_b / S_n, in rad/s per unit power."""
    return R_pu * base.omega_b / _rating(S_pu, base)


def droop_pu(R: float, S_pu: float, base: BaseSystem) -> float:
    """Inverse of :func:`droop_si`."""
    return R * _rating(S_pu, base) / base.omega_b


def scr(X_pu: float, k: float) -> float:
    """
    Short-circuit ratio seen from the load bus.

    The two tie segments kX and (1-k)X are in parallel, so
    SCR = 1 / (X k (1-k)).
    """
    _check_split(X_pu, k)
    return 1.0 / (X_pu * k * (1.0 - k))


def x_from_scr(SCR: float, k: float) -> float:
    """Tie reactance that gives the requested short-circuit ratio."""
    _check_split(SCR, k)
    return 1.0 / (SCR * k * (1.0 - k))


def _check_split(value: float, k: float) -> None:
    if value <= 0:
        raise ValueError(f"expected a positive value, got {value}")
    if not 0 < k < 1:
        raise ValueError(f"split point k must lie in (0, 1), got {k}")
