"""
Linear time-domain simulation.

Step responses are propagated exactly at the sample instants with the
zero-order-hold discretization exp([[A, B], [0, 0]] dt). The same engine
drives the single-bus aggregate used for RoCoF and nadir studies.
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from gridmodal.engine.modal import analyze, eigen
from gridmodal.engine.statespace import assemble_scenario
from gridmodal.errors import AssemblyError
from gridmodal.models.aggregate import AggregateSystem
from gridmodal.models.modes import ModeLabel
from gridmodal.models.scenario import Scenario
from gridmodal.models.statespace import StateSpaceModel
from gridmodal.models.timeseries import GovernorModeResult, RocofMetrics, TimeSeries

logger = logging.getLogger("gridmodal.engine.sim")

SETTLING_BAND = 0.05


def discretize(A: np.ndarray, B: np.ndarray, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Zero-order-hold discretization of (A, B).

    Returns:
        (Ad, Bd) with x[k+1] = Ad x[k] + Bd u[k]
    """
    n, m = B.shape
    block = np.zeros((n + m, n + m))
    block[:n, :n] = A
    block[:n, n:] = B
    exponential = scipy.linalg.expm(block * dt)
    return exponential[:n, :n], exponential[:n, n:]


def _check_horizon(t_end: float, dt: float) -> int:
    if dt <= 0 or t_end <= 0:
        raise ValueError("t_end and dt must be positive")
    if dt > t_end / 10.0 * (1.0 + 1e-12):
        raise ValueError(f"dt = {dt} must not exceed t_end/10 = {t_end / 10.0}")
    return int(round(t_end / dt))


def propagate(
    model: StateSpaceModel, u: np.ndarray, t_end: float, dt: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Response from rest to a constant input vector applied at t = 0.

    Args:
        model: Linear model
        u: Input vector, one entry per input channel
        t_end: Horizon, s
        dt: Sample step, s

    Returns:
        Tuple (t, states, outputs) with one row per sample
    """
    steps = _check_horizon(t_end, dt)
    u = np.asarray(u, dtype=float)
    Ad, Bd = discretize(model.A, (model.B @ u)[:, None], dt)
    forcing = Bd[:, 0]

    t = dt * np.arange(steps + 1)
    states = np.zeros((steps + 1, model.n_states))
    x = np.zeros(model.n_states)
    for k in range(1, steps + 1):
        x = Ad @ x + forcing
        states[k] = x
    outputs = states @ model.C.T + (model.D @ u)[None, :]
    return t, states, outputs


def _unit(label: str) -> str:
    if label.startswith("omega"):
        return "rad/s"
    if label.startswith("delta"):
        return "rad"
    if label.endswith("_hz"):
        return "Hz"
    return "pu"


def step_response(
    model: StateSpaceModel,
    input: str,
    magnitude: float,
    t_end: float,
    dt: float,
    outputs: Optional[Sequence[str]] = None,
) -> TimeSeries:
    """
    Response of the model outputs to a step on one input channel.

    Args:
        model: Linear model
        input: Input channel label, e.g. "R_LD" or "Pref1"
        magnitude: Step size in the channel's units
        t_end: Horizon, s
        dt: Sample step, at most t_end/10
        outputs: Optional subset of output channels

    Returns:
        Output trajectories, including the feedthrough D u

    Raises:
        ChannelError: If a channel does not exist
    """
    column = model.input_index(input)
    if outputs:
        model = model.select_outputs(outputs)
    u = np.zeros(len(model.input_labels))
    u[column] = magnitude
    t, _, y = propagate(model, u, t_end, dt)
    logger.debug(f"Simulated step of {magnitude:.6g} on {input} over {t_end} s")
    return TimeSeries(
        t=t,
        channels={label: y[:, i] for i, label in enumerate(model.output_labels)},
        units={label: _unit(label) for label in model.output_labels},
    )


def final_value(model: StateSpaceModel, input: str, magnitude: float) -> Dict[str, float]:
    """Steady-state outputs -C A^-1 B u + D u after a step (A must be invertible)."""
    u = np.zeros(len(model.input_labels))
    u[model.input_index(input)] = magnitude
    x_ss = -np.linalg.solve(model.A, model.B @ u)
    y_ss = model.C @ x_ss + model.D @ u
    return {label: float(value) for label, value in zip(model.output_labels, y_ss)}


def governor_mode_demo(
    scenario: Scenario,
    Tg1: float = 0.5,
    Tg2: float = 1.5,
    magnitude: float = 0.01,
    t_end: float = 10.0,
    dt: float = 0.01,
) -> GovernorModeResult:
    """
    Excite the differential governor mode with a symmetric dispatch step.

    Both setpoints rise by ``magnitude``. The governor-mode component of
    Pm1 - Pm2 is obtained by projecting the state trajectory on the left
    eigenvector of the Governor-labelled eigenvalue, and its 95 % settling
    time is measured on the simulated samples.

    Args:
        scenario: Two-GC-SG scenario, symmetric apart from the governor time constants
        Tg1, Tg2: Governor time constants to impose, s
        magnitude: Setpoint step on each machine, pu
        t_end: Horizon, s
        dt: Sample step, s

    Returns:
        Trajectories and settling metrics
    """
    if len(scenario.machines) != 2 or any(m.is_gfm for m in scenario.machines):
        raise AssemblyError("the governor-mode demonstration needs two gcsg machines")
    if scenario.network is not None and abs(scenario.network.k - 0.5) > 1e-12:
        logger.warning(f"Governor-mode demonstration with asymmetric split k={scenario.network.k}")

    tuned = scenario.with_parameter("Tg1", Tg1).with_parameter("Tg2", Tg2)
    model = assemble_scenario(tuned, outputs=("omega1", "omega2", "Pm1", "Pm2")).model
    u = np.zeros(len(model.input_labels))
    u[model.input_index("Pref1")] = magnitude
    u[model.input_index("Pref2")] = magnitude
    t, states, outputs = propagate(model, u, t_end, dt)
    pm1, pm2 = outputs[:, 2], outputs[:, 3]
    difference = pm1 - pm2

    M1, M2 = model.inertia["omega1"], model.inertia["omega2"]
    weighted = (M1 * Tg1 + M2 * Tg2) / (M1 + M2)

    governor = analyze(model).first(ModeLabel.GOVERNOR)
    component = np.zeros_like(t)
    eigenvalue: Optional[float] = None
    settling, decay = 0.0, float("nan")
    if governor is not None:
        eigenvalue = governor.eigenvalue.real
        decomposition = eigen(model.A)
        index = int(np.argmin(np.abs(decomposition.values - governor.eigenvalue)))
        left = np.conj(decomposition.left[:, index])
        right = decomposition.right[:, index]
        p1, p2 = model.state_index("Pm1"), model.state_index("Pm2")
        gain = (right[p1] - right[p2]) / (left @ right)
        component = np.real((states @ left) * gain)
        steady = float(np.real(-(left @ (model.B @ u)) * gain / decomposition.values[index]))
        if abs(steady) > 1e-9 * abs(magnitude):
            settling, decay = _settling(t, component, steady)

    logger.info(
        f"Governor mode: eigenvalue {eigenvalue}, weighted Tg {weighted:.3f} s, "
        f"95% settling {settling:.2f} s"
    )
    series = TimeSeries(
        t=t,
        channels={"Pm1": pm1, "Pm2": pm2, "Pm_diff": difference, "governor_component": component},
        units={"Pm1": "pu", "Pm2": "pu", "Pm_diff": "pu", "governor_component": "pu"},
    )
    return GovernorModeResult(
        series=series,
        eigenvalue=eigenvalue,
        weighted_time_constant=weighted,
        settling_time=settling,
        decay_rate=decay,
    )


def _settling(t: np.ndarray, signal: np.ndarray, steady: float) -> Tuple[float, float]:
    error = np.abs(signal - steady)
    outside = np.nonzero(error > SETTLING_BAND * abs(steady))[0]
    settling = 0.0 if len(outside) == 0 else float(t[min(outside[-1] + 1, len(t) - 1)])

    fit = (error > 1e-6 * abs(steady)) & (t > 0)
    decay = float("nan")
    if np.count_nonzero(fit) >= 2:
        slope = np.polyfit(t[fit], np.log(error[fit]), 1)[0]
        decay = float(-slope)
    return settling, decay


def instantaneous_rocof(H_eq: float, dP: float, f0: float = 50.0) -> float:
    """Initial rate of change of frequency dP f0 / (2 H), in Hz/s."""
    if H_eq <= 0:
        raise ValueError(f"equivalent inertia must be positive, got {H_eq}")
    return dP * f0 / (2.0 * H_eq)


def build_aggregate_model(system: AggregateSystem, f0: float = 50.0) -> StateSpaceModel:
    """
    Single-bus frequency model with input dP (power deficit, pu).

    2H df/dt = -D f + Pm + xs - dP, with optional first-order primary
    regulation Tg dPm/dt = -Pm - f/R and secondary regulation dxs/dt = -Ki f.
    The output is the frequency deviation in Hz.
    """
    labels = ["f"]
    if system.primary is not None:
        labels.append("Pm")
    if system.secondary is not None:
        labels.append("xs")
    n = len(labels)
    two_h = 2.0 * system.H

    A = np.zeros((n, n))
    B = np.zeros((n, 1))
    A[0, 0] = -system.damping / two_h
    B[0, 0] = -1.0 / two_h
    if system.primary is not None:
        p = labels.index("Pm")
        A[0, p] = 1.0 / two_h
        A[p, 0] = -1.0 / (system.primary.R * system.primary.tau)
        A[p, p] = -1.0 / system.primary.tau
    if system.secondary is not None:
        s = labels.index("xs")
        A[0, s] = 1.0 / two_h
        A[s, 0] = -system.secondary.Ki

    C = np.zeros((1, n))
    C[0, 0] = f0
    return StateSpaceModel(
        A=A,
        B=B,
        C=C,
        D=np.zeros((1, 1)),
        state_labels=tuple(labels),
        input_labels=("dP",),
        output_labels=("delta_f_hz",),
        name="aggregate",
    )


def rocof_study(
    system: AggregateSystem,
    dP: float,
    windows: Sequence[float],
    t_end: float,
    dt: float = 1e-3,
    f0: float = 50.0,
) -> Tuple[RocofMetrics, TimeSeries]:
    """
    Windowed RoCoF and nadir of the aggregate system after a generation loss.

    RoCoF over a window W is |df(W) - df(0)| / W, measured from the event at
    t = 0. The nadir is the signed frequency deviation of largest magnitude.

    Args:
        system: Aggregate inertia, damping and regulation
        dP: Power deficit, pu
        windows: Measurement windows, s
        t_end: Horizon, s
        dt: Sample step, s
        f0: Nominal frequency, Hz

    Returns:
        Metrics and the frequency-deviation trajectory
    """
    if dP <= 0:
        raise ValueError(f"generation loss must be positive, got {dP}")
    for window in windows:
        if not 0 < window < t_end:
            raise ValueError(f"window {window} s outside (0, {t_end})")

    series = step_response(build_aggregate_model(system, f0), "dP", dP, t_end, dt)
    deviation = series["delta_f_hz"]
    rocof = {
        float(window): abs(float(np.interp(window, series.t, deviation)) - deviation[0]) / window
        for window in windows
    }
    extreme = int(np.argmax(np.abs(deviation)))
    metrics = RocofMetrics(
        rocof=rocof, nadir=float(deviation[extreme]), t_nadir=float(series.t[extreme])
    )
    logger.info(
        "RoCoF study: "
        + ", ".join(f"{w * 1000:.0f} ms {v:.3f} Hz/s" for w, v in rocof.items())
        + f", nadir {metrics.nadir:.3f} Hz at {metrics.t_nadir:.2f} s"
    )
    return metrics, series
