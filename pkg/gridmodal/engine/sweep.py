"""
Parameter sweeps (root loci).

Every grid point is an independent modal analysis. Points are fanned out to
a process pool when the grid is large enough, and results are reassembled in
grid order so the outcome does not depend on completion order.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment
from tqdm import tqdm

from gridmodal.config import Config
from gridmodal.engine.modal import analyze
from gridmodal.engine.operating import solve_operating_point
from gridmodal.engine.statespace import assemble_scenario
from gridmodal.errors import GridModalError
from gridmodal.models.modes import ModeSet, ModeTrajectory, SweepResult, TrajectoryPoint
from gridmodal.models.operating import OperatingPoint
from gridmodal.models.scenario import OPERATING_POINT_PARAMETERS, Scenario

logger = logging.getLogger("gridmodal.engine.sweep")

PARALLEL_THRESHOLD = 10

_PointResult = Tuple[Optional[ModeSet], Optional[str]]


def _evaluate_point(
    scenario: Scenario, parameter: str, value: float, op: Optional[OperatingPoint]
) -> _PointResult:
    try:
        case = assemble_scenario(scenario.with_parameter(parameter, value), operating_point=op)
        return analyze(case.model), None
    except (GridModalError, ValueError) as exc:
        return None, str(exc)


def _evaluate_star(args: Tuple[Scenario, str, float, Optional[OperatingPoint]]) -> _PointResult:
    return _evaluate_point(*args)


def sweep(
    scenario: Scenario,
    parameter: str,
    values: Iterable[float],
    config: Optional[Config] = None,
) -> SweepResult:
    """
    Repeat the modal analysis of a scenario over a parameter grid.

    The operating point is solved once and reused when the parameter only
    changes the dynamics (H, D, R, Tg); otherwise it is re-solved per point.
    Points that fail are logged and recorded, not raised.

    Args:
        scenario: Base scenario
        parameter: Sweep parameter name, e.g. "H1" or "SCR"
        values: Parameter grid
        config: Run configuration (workers, progress bar, jump threshold)

    Returns:
        Mode sets per point and mode trajectories traced by continuity
    """
    config = config or Config()
    grid = np.asarray(list(values), dtype=float)
    start_time = time.time()

    shared_op: Optional[OperatingPoint] = None
    if parameter not in OPERATING_POINT_PARAMETERS and not scenario.is_single_machine:
        shape = scenario.network_shape()
        shared_op = solve_operating_point(shape, scenario.dispatch)  # type: ignore[arg-type]

    tasks = [(scenario, parameter, float(value), shared_op) for value in grid]
    results: List[_PointResult]
    if len(tasks) <= PARALLEL_THRESHOLD or config.max_workers == 1:
        iterator = map(_evaluate_star, tasks)
        results = list(_progress(iterator, len(tasks), parameter, config.show_progress))
    else:
        with ProcessPoolExecutor(max_workers=config.max_workers) as executor:
            iterator = executor.map(_evaluate_star, tasks)
            results = list(_progress(iterator, len(tasks), parameter, config.show_progress))

    modesets: List[Optional[ModeSet]] = []
    failures = {}
    for index, (modeset, error) in enumerate(results):
        modesets.append(modeset)
        if error is not None:
            failures[index] = error
            logger.debug(f"Sweep point {parameter}={grid[index]:.6g} failed: {error}")
    if failures:
        logger.warning(f"{len(failures)} of {len(grid)} sweep points failed for {parameter}")

    trajectories = trace_trajectories(grid, modesets, config.jump_threshold)
    logger.info(
        f"Swept {parameter} over {len(grid)} points in {time.time() - start_time:.2f} seconds "
        f"({len(trajectories)} trajectories)"
    )
    return SweepResult(
        parameter=parameter,
        values=grid,
        modesets=modesets,
        failures=failures,
        trajectories=trajectories,
    )


def _progress(
    iterator: Iterable[_PointResult], total: int, parameter: str, enabled: bool
) -> Iterable[_PointResult]:
    if not enabled:
        return iterator
    return tqdm(iterator, total=total, desc=f"sweep {parameter}", unit="pt")


def trace_trajectories(
    grid: Sequence[float], modesets: Sequence[Optional[ModeSet]], jump_threshold: float
) -> List[ModeTrajectory]:
    """
    Follow modes across consecutive grid points by minimal |delta lambda| assignment.

    A match whose jump exceeds ``jump_threshold`` ends the trajectory and
    starts a new one; unmatched modes also start new trajectories. Failed
    points are skipped.
    """
    trajectories: List[ModeTrajectory] = []
    active: List[ModeTrajectory] = []

    for value, modeset in zip(grid, modesets):
        if modeset is None:
            continue
        current = list(modeset)
        assigned: List[Optional[ModeTrajectory]] = [None] * len(current)

        if active and current:
            previous = np.array([trajectory.points[-1].eigenvalue for trajectory in active])
            now = np.array([mode.eigenvalue for mode in current])
            cost = np.abs(previous[:, None] - now[None, :])
            rows, cols = linear_sum_assignment(cost)
            for row, col in zip(rows, cols):
                if cost[row, col] <= jump_threshold:
                    assigned[col] = active[row]

        next_active: List[ModeTrajectory] = []
        for mode, trajectory in zip(current, assigned):
            if trajectory is None:
                trajectory = ModeTrajectory(id=len(trajectories))
                trajectories.append(trajectory)
            trajectory.points.append(
                TrajectoryPoint(value=float(value), eigenvalue=mode.eigenvalue, label=mode.label)
            )
            next_active.append(trajectory)
        active = next_active

    return trajectories
