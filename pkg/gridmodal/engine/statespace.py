"""
Linearized state-space models of the microgrid.

Covers the single governor-controlled generator feeding a load, the
droop-based grid-forming converter and its inertial equivalent, and the
two-machine system with any mix of the two kinds. Speed deviations are kept
in rad/s; reports convert them to Hz.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from gridmodal.engine.operating import (
    linearize,
    single_load_sensitivity,
    solve_operating_point,
    solve_single_operating_point,
)
from gridmodal.engine.perunit import damping_si, droop_si, momentum
from gridmodal.errors import AssemblyError
from gridmodal.models.machine import BaseSystem, MachineParams
from gridmodal.models.operating import LinCoeffs, OperatingPoint, SingleMachinePoint
from gridmodal.models.scenario import Scenario
from gridmodal.models.statespace import SecondOrderSummary, StateSpaceModel

logger = logging.getLogger("gridmodal.engine.statespace")

TWO_MACHINE_INPUTS = ("Pref1", "Pref2", "omega_ref1", "omega_ref2", "R_LD")
DEFAULT_OUTPUTS = ("omega1", "omega2", "Pe1")

# Typical governor time constant and inertia ranges per prime-mover technology
GOVERNOR_TECHNOLOGIES: Dict[str, Tuple[Tuple[float, float], Tuple[float, float]]] = {
    "Hydro": ((0.2, 0.5), (3.0, 9.0)),
    "Steam": ((0.2, 0.3), (4.0, 10.0)),
    "Gas/Genset": ((0.1, 0.3), (5.0, 9.0)),
    "Nuclear": ((0.2, 0.4), (5.0, 8.0)),
    "Coal-fired": ((0.2, 0.3), (4.0, 8.0)),
}


@dataclass(frozen=True)
class CriticalDampingRange:
    """Droop and natural-frequency ranges of a technology tuned at R = Tg/H."""

    technology: str
    Tg: Tuple[float, float]
    H: Tuple[float, float]
    R: Tuple[float, float]
    fn: Tuple[float, float]


@dataclass(frozen=True)
class AssembledCase:
    """A scenario's linear model together with the equilibrium it was built on."""

    model: StateSpaceModel
    operating_point: Union[OperatingPoint, SingleMachinePoint]
    coefficients: Optional[LinCoeffs] = None


@dataclass(frozen=True)
class _MachineTerms:
    M: float
    D: float
    R: Optional[float]
    Tg: Optional[float]


def _machine_terms(machine: MachineParams, base: BaseSystem, index: int) -> _MachineTerms:
    M = momentum(machine.H, machine.S_pu, base)
    if M <= 0.0:
        raise AssemblyError(f"machine {index} has zero inertia; a speed state needs M > 0")
    D = damping_si(machine.damping, machine.S_pu, base)
    if machine.is_gfm:
        return _MachineTerms(M=M, D=D, R=None, Tg=None)
    return _MachineTerms(M=M, D=D, R=droop_si(machine.droop, machine.S_pu, base), Tg=machine.Tg)


def turbine_governor_summary(H: float, R_pu: float, Tg: float) -> SecondOrderSummary:
    """
    Natural frequency and damping of the turbine-governor loop, neglecting D.

    Args:
        H: Inertia constant, s
        R_pu: Droop, pu
        Tg: Governor time constant, s

    Returns:
        fn = sqrt(1/(2 H R Tg))/2pi, zeta = sqrt(H R/(2 Tg)) and the R > Tg/H flag
    """
    if min(H, R_pu, Tg) <= 0:
        raise ValueError("H, R_pu and Tg must be positive")
    return SecondOrderSummary(
        fn=math.sqrt(1.0 / (2.0 * H * R_pu * Tg)) / (2.0 * math.pi),
        zeta=math.sqrt(H * R_pu / (2.0 * Tg)),
        critically_damped=R_pu > Tg / H,
    )


def critical_damping_ranges() -> List[CriticalDampingRange]:
    """Droop and natural frequency at the corners of each technology's (Tg, H) box."""
    rows = []
    for technology, (tg_range, h_range) in GOVERNOR_TECHNOLOGIES.items():
        droops = [tg / h for tg in tg_range for h in h_range]
        frequencies = [
            turbine_governor_summary(h, tg / h, tg).fn for tg in tg_range for h in h_range
        ]
        rows.append(
            CriticalDampingRange(
                technology=technology,
                Tg=tg_range,
                H=h_range,
                R=(min(droops), max(droops)),
                fn=(min(frequencies), max(frequencies)),
            )
        )
    return rows


def gfm_equivalence(Tf: float, R_droop_pu: float) -> Tuple[float, float]:
    """
    Inertial equivalent of a droop law with a first-order power filter.

    Returns:
        (M_virtual, D_virtual) = (Tf/R, 1/R) in pu on the converter base
    """
    if Tf <= 0 or R_droop_pu <= 0:
        raise ValueError("Tf and R must be positive")
    return Tf / R_droop_pu, 1.0 / R_droop_pu


def virtual_inertia_constant(Tf: float, R_droop_pu: float) -> float:
    """Virtual inertia constant H such that 2H = Tf/R."""
    return gfm_equivalence(Tf, R_droop_pu)[0] / 2.0


def implied_filter_constant(H_virtual: float, R_droop_pu: float) -> float:
    """Power filter constant Tf = 2 H R that realises a virtual inertia H."""
    return 2.0 * H_virtual * R_droop_pu


def build_single_gcsg(
    machine: MachineParams, d1: float, base: Optional[BaseSystem] = None
) -> StateSpaceModel:
    """
    Single governor-controlled generator feeding a resistive load.

    States [omega1, Pm1]; inputs [Pref1, omega_ref1, R_LD]; outputs [omega1, Pe1].

    Args:
        machine: A GC-SG
        d1: Load sensitivity dPe1/dR_LD at the equilibrium, pu/pu
        base: System base, 50 Hz pu by default

    Raises:
        AssemblyError: If the machine is a GFM or has zero inertia
    """
    base = base or BaseSystem()
    if machine.is_gfm:
        raise AssemblyError("build_single_gcsg needs a gcsg machine")
    terms = _machine_terms(machine, base, 1)
    d = d1 * base.Sbase / base.Zb
    A = np.array(
        [
            [-terms.D / terms.M, 1.0 / terms.M],
            [-1.0 / (terms.R * terms.Tg), -1.0 / terms.Tg],  # type: ignore[operator]
        ]
    )
    B = np.array(
        [
            [0.0, 0.0, -d / terms.M],
            [1.0 / terms.Tg, 1.0 / (terms.R * terms.Tg), 0.0],  # type: ignore[operator]
        ]
    )
    C = np.array([[1.0, 0.0], [0.0, 0.0]])
    D = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, d]])
    return StateSpaceModel(
        A=A,
        B=B,
        C=C,
        D=D,
        state_labels=("omega1", "Pm1"),
        input_labels=("Pref1", "omega_ref1", "R_LD"),
        output_labels=("omega1", "Pe1"),
        inertia={"omega1": terms.M},
    )


def build_single_gfm(
    machine: MachineParams, d1: float, base: Optional[BaseSystem] = None
) -> StateSpaceModel:
    """Single grid-forming converter feeding a resistive load, seen as its inertial equivalent."""
    base = base or BaseSystem()
    if not machine.is_gfm:
        raise AssemblyError("build_single_gfm needs a gfm machine")
    terms = _machine_terms(machine, base, 1)
    d = d1 * base.Sbase / base.Zb
    return StateSpaceModel(
        A=np.array([[-terms.D / terms.M]]),
        B=np.array([[1.0 / terms.M, terms.D / terms.M, -d / terms.M]]),
        C=np.array([[1.0], [0.0]]),
        D=np.array([[0.0, 0.0, 0.0], [0.0, 0.0, d]]),
        state_labels=("omega1",),
        input_labels=("Pref1", "omega_ref1", "R_LD"),
        output_labels=("omega1", "Pe1"),
        inertia={"omega1": terms.M},
    )


def build_two_machine(
    m1: MachineParams,
    m2: MachineParams,
    lin: LinCoeffs,
    base: Optional[BaseSystem] = None,
    outputs: Sequence[str] = DEFAULT_OUTPUTS,
) -> StateSpaceModel:
    """
    Two machines coupled through the reduced network.

    States are ordered [delta12, omega1, Pm1, omega2, Pm2]; a GFM machine has
    no Pm state and enters only through -D/M on its speed diagonal. Its
    setpoint and frequency reference act directly on its speed equation.

    Args:
        m1: Machine on bus 1
        m2: Machine on bus 2
        lin: Linearization coefficients at the equilibrium
        base: System base, 50 Hz pu by default
        outputs: Output channels, from omega1, omega2, delta12, Pe1, Pe2, Pm1, Pm2

    Returns:
        The assembled model

    Raises:
        AssemblyError: On zero inertia or an output the machine mix does not have
    """
    base = base or BaseSystem()
    machines = (m1, m2)
    terms = [_machine_terms(machine, base, i + 1) for i, machine in enumerate(machines)]
    K = (lin.Klin1 * base.Sbase, lin.Klin2 * base.Sbase)
    d = (lin.d1 * base.Sbase / base.Zb, lin.d2 * base.Sbase / base.Zb)

    states = ["delta12"]
    for i, machine in enumerate(machines, start=1):
        states.append(f"omega{i}")
        if not machine.is_gfm:
            states.append(f"Pm{i}")
    index = {label: position for position, label in enumerate(states)}
    inputs = {label: position for position, label in enumerate(TWO_MACHINE_INPUTS)}

    n = len(states)
    A = np.zeros((n, n))
    B = np.zeros((n, len(TWO_MACHINE_INPUTS)))
    A[0, index["omega1"]] = 1.0
    A[0, index["omega2"]] = -1.0

    for i, (machine, term) in enumerate(zip(machines, terms), start=1):
        w = index[f"omega{i}"]
        A[w, 0] = -K[i - 1] / term.M
        A[w, w] = -term.D / term.M
        B[w, inputs["R_LD"]] = -d[i - 1] / term.M
        if machine.is_gfm:
            B[w, inputs[f"Pref{i}"]] = 1.0 / term.M
            B[w, inputs[f"omega_ref{i}"]] = term.D / term.M
            continue
        p = index[f"Pm{i}"]
        A[w, p] = 1.0 / term.M
        A[p, w] = -1.0 / (term.R * term.Tg)  # type: ignore[operator]
        A[p, p] = -1.0 / term.Tg  # type: ignore[operator]
        B[p, inputs[f"Pref{i}"]] = 1.0 / term.Tg  # type: ignore[operator]
        B[p, inputs[f"omega_ref{i}"]] = 1.0 / (term.R * term.Tg)  # type: ignore[operator]

    C = np.zeros((len(outputs), n))
    D = np.zeros((len(outputs), len(TWO_MACHINE_INPUTS)))
    for row, label in enumerate(outputs):
        if label in ("Pe1", "Pe2"):
            i = int(label[-1]) - 1
            C[row, 0] = K[i]
            D[row, inputs["R_LD"]] = d[i]
        elif label in index:
            C[row, index[label]] = 1.0
        else:
            raise AssemblyError(
                f"output '{label}' is not available; states are {', '.join(states)}"
            )

    return StateSpaceModel(
        A=A,
        B=B,
        C=C,
        D=D,
        state_labels=tuple(states),
        input_labels=TWO_MACHINE_INPUTS,
        output_labels=tuple(outputs),
        inertia={f"omega{i}": term.M for i, term in enumerate(terms, start=1)},
    )


def single_machine_reactance(scenario: Scenario) -> float:
    """Line reactance of the one-generator topology: X, or 1/SCR when SCR is given."""
    network = scenario.network
    if network is None:
        raise AssemblyError(f"scenario '{scenario.name}' has no network block")
    return network.X if network.X is not None else 1.0 / network.SCR  # type: ignore[operator]


def assemble_scenario(
    scenario: Scenario,
    operating_point: Optional[OperatingPoint] = None,
    outputs: Optional[Sequence[str]] = None,
) -> AssembledCase:
    """
    Solve a scenario's equilibrium and assemble its linear model.

    Args:
        scenario: Scenario with one or two machines
        operating_point: Reuse this equilibrium instead of solving again
        outputs: Output channels for two-machine models

    Returns:
        The model with its operating point and coefficients
    """
    if not scenario.machines:
        raise AssemblyError(f"scenario '{scenario.name}' has no machines")
    base = scenario.base

    if scenario.is_single_machine:
        machine = scenario.machines[0]
        X = single_machine_reactance(scenario)
        V1 = scenario.network.V1  # type: ignore[union-attr]
        point = solve_single_operating_point(V1, X, scenario.dispatch.Pref1)  # type: ignore
        d1 = single_load_sensitivity(V1, X, point.R_LD)
        build = build_single_gfm if machine.is_gfm else build_single_gcsg
        model = build(machine, d1, base)
        return AssembledCase(model=_named(model, scenario.name), operating_point=point)

    shape = scenario.network_shape()
    op = operating_point or solve_operating_point(shape, scenario.dispatch)  # type: ignore
    lin = linearize(shape.with_load(op.R_LD), op)
    model = build_two_machine(
        scenario.machines[0], scenario.machines[1], lin, base, outputs or DEFAULT_OUTPUTS
    )
    logger.debug(f"Assembled '{scenario.name}' with states {', '.join(model.state_labels)}")
    return AssembledCase(model=_named(model, scenario.name), operating_point=op, coefficients=lin)


def _named(model: StateSpaceModel, name: str) -> StateSpaceModel:
    return replace(model, name=name)
