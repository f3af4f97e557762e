"""
Modal analysis: eigenstructure, participation factors and mode classification.
"""

import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np
import scipy.linalg

from gridmodal.errors import EigenSolverError
from gridmodal.models.modes import Mode, ModeLabel, ModeSet
from gridmodal.models.statespace import StateSpaceModel

logger = logging.getLogger("gridmodal.engine.modal")

RESIDUAL_TOLERANCE = 1e-9
DOMINANCE_THRESHOLD = 0.4
MAX_DIMENSION = 64


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """
    Eigenvalues with right and left eigenvectors, sorted by (Re, |Im|).

    Column i of ``right`` satisfies A v = lambda v and column i of ``left``
    satisfies u^H A = lambda u^H.
    """

    values: np.ndarray
    right: np.ndarray
    left: np.ndarray
    residual: float

    def participation(self) -> np.ndarray:
        """Participation factors |u_ki v_ki|, normalized to unit sum per mode (column)."""
        products = np.abs(np.conj(self.left) * self.right)
        totals = products.sum(axis=0)
        totals[totals == 0.0] = 1.0
        return products / totals


def eigen(A: np.ndarray) -> EigenDecomposition:
    """
    Dense eigen-decomposition with a residual check.

    Args:
        A: Real square matrix

    Returns:
        Sorted eigenvalues with right and left eigenvectors

    Raises:
        EigenSolverError: If LAPACK fails or a pair violates
            ||A v - lambda v|| <= 1e-9 ||A|| (infinity norms, unit eigenvectors)
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise EigenSolverError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] > MAX_DIMENSION:
        raise EigenSolverError(f"matrix dimension {A.shape[0]} exceeds {MAX_DIMENSION}")
    if not np.all(np.isfinite(A)):
        raise EigenSolverError("matrix contains non-finite entries")

    try:
        values, left, right = scipy.linalg.eig(A, left=True, right=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigenSolverError(f"eigenvalue iteration failed: {exc}")

    order = sorted(
        range(len(values)), key=lambda i: (values[i].real, abs(values[i].imag), values[i].imag)
    )
    values, left, right = values[order], left[:, order], right[:, order]

    norm = float(np.linalg.norm(A, np.inf))
    residual = 0.0
    if len(values):
        residual = float(np.max(np.abs(A @ right - right * values)))
    bound = RESIDUAL_TOLERANCE * norm
    if residual > bound:
        raise EigenSolverError(
            f"eigen residual {residual:.3e} exceeds bound {bound:.3e}",
            residual=residual,
            bound=bound,
        )
    logger.debug(f"Eigen decomposition of order {A.shape[0]}, residual {residual:.2e}")
    return EigenDecomposition(values=values, right=right, left=left, residual=residual)


def analyze(model: StateSpaceModel) -> ModeSet:
    """
    Modes of a linear model with frequency, damping, shape and participation.

    Complex conjugate pairs are stored once, with Im(lambda) >= 0.

    Args:
        model: Assembled state-space model

    Returns:
        Classified mode set
    """
    decomposition = eigen(model.A)
    participation = decomposition.participation()
    labels = model.state_labels

    modes: List[Mode] = []
    for i, value in enumerate(decomposition.values):
        if value.imag < 0.0:
            continue
        vector = decomposition.right[:, i]
        pivot = vector[int(np.argmax(np.abs(vector)))]
        shape = vector / pivot if pivot != 0 else vector
        modes.append(
            Mode(
                eigenvalue=complex(value.real, value.imag),
                shape={label: complex(component) for label, component in zip(labels, shape)},
                participation={
                    label: float(p) for label, p in zip(labels, participation[:, i])
                },
            )
        )
    return classify(ModeSet(modes=tuple(modes), state_labels=labels), model)


def is_common_mode(mode: Mode, model: StateSpaceModel) -> bool:
    """
    Whether the machine speeds move together in a mode.

    The centre-of-inertia component |M1 w1 + M2 w2| / (M1 + M2) is compared
    with the differential component |w1 - w2| / 2. Single-speed models are
    always common.
    """
    speeds = model.speed_states
    if len(speeds) < 2:
        return True
    w1, w2 = mode.shape[speeds[0]], mode.shape[speeds[1]]
    M1, M2 = model.inertia.get(speeds[0], 1.0), model.inertia.get(speeds[1], 1.0)
    centre = abs(M1 * w1 + M2 * w2) / (M1 + M2)
    return centre >= abs(w1 - w2) / 2.0


def _governors_antiphase(mode: Mode, model: StateSpaceModel) -> bool:
    governors = model.governor_states
    if len(governors) < 2:
        return False
    p1, p2 = mode.shape[governors[0]], mode.shape[governors[1]]
    return (p1 * p2.conjugate()).real < 0.0


def classify(modes: ModeSet, model: StateSpaceModel) -> ModeSet:
    """
    Label modes from participation factors and speed phasing.

    - complex, differential, angle/speed participation > 0.4: Swing
    - complex, common, governor participation > 0.4: TurbineGovernor
    - real, governor participation > 0.4 with governors in antiphase: Governor
    - real, common, model has governor states: TurbineGovernor (overdamped)
    - zero or other real eigenvalues: Real
    - anything else: Unclassified
    """
    mechanical = ("delta12",) + model.speed_states
    governors = model.governor_states
    scale = max(1.0, float(np.linalg.norm(model.A, np.inf)))

    labels = []
    for mode in modes:
        mech = mode.group_participation(mechanical)
        gov = mode.group_participation(governors)
        if abs(mode.eigenvalue) <= RESIDUAL_TOLERANCE * scale:
            label = ModeLabel.REAL
        elif mode.is_complex:
            common = is_common_mode(mode, model)
            if not common and mech > DOMINANCE_THRESHOLD:
                label = ModeLabel.SWING
            elif common and gov > DOMINANCE_THRESHOLD:
                label = ModeLabel.TURBINE_GOVERNOR
            else:
                label = ModeLabel.UNCLASSIFIED
        elif gov > DOMINANCE_THRESHOLD and _governors_antiphase(mode, model):
            label = ModeLabel.GOVERNOR
        elif governors and is_common_mode(mode, model):
            label = ModeLabel.TURBINE_GOVERNOR
        else:
            label = ModeLabel.REAL
        labels.append(label)
    return modes.relabeled(labels)


def swing_mode_prediction(M1: float, M2: float, V: float, X: float) -> float:
    """
    Undamped swing-mode frequency of two inertias coupled by a reactance.

    Args:
        M1, M2: Angular momenta on the system base
        V: Voltage magnitude, pu
        X: Tie reactance, pu

    Returns:
        fn = sqrt((1/M1 + 1/M2) V^2 / X) / 2pi, in Hz
    """
    if min(M1, M2, V, X) <= 0:
        raise ValueError("M1, M2, V and X must be positive")
    return math.sqrt((1.0 / M1 + 1.0 / M2) * V**2 / X) / (2.0 * math.pi)
