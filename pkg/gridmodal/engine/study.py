"""
Analysis runner for GridModal.

A Study binds one scenario to a run configuration, times every analysis it
performs and hands the results to the configured exporters.
"""

import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence

from pydantic import ValidationError

from gridmodal.config import Config
from gridmodal.engine.modal import analyze
from gridmodal.engine.sim import governor_mode_demo, rocof_study, step_response
from gridmodal.engine.statespace import AssembledCase, assemble_scenario
from gridmodal.engine.sweep import sweep
from gridmodal.errors import AssemblyError, ScenarioError
from gridmodal.exporters import BaseExporter, exporter_factory
from gridmodal.models import (
    GovernorModeResult,
    ModeSet,
    RocofMetrics,
    RocofSpec,
    Scenario,
    SimSpec,
    SweepResult,
    SweepSpec,
    TimeSeries,
)
from gridmodal.scenarios import validation_messages

logger = logging.getLogger("gridmodal.engine.study")

RELATIVE_INPUTS = ("R_LD", "Pref1", "Pref2")


class Study:
    """
    Runs the analyses of one scenario and exports their results.

    Every analysis records its wall time in ``metrics`` and appends the paths
    it wrote to ``written``.
    """

    def __init__(self, scenario: Scenario, config: Optional[Config] = None):
        """
        Initialize the study.

        Args:
            scenario: Validated scenario
            config: Run configuration; output directory and SVG emission come from here
        """
        self.scenario = scenario
        self.config = config or Config()
        self.metrics: Dict[str, float] = {}
        self.written: List[str] = []

        formats = ["csv", "report"] + (["svg"] if self.config.svg else [])
        self.exporters: List[BaseExporter] = [
            exporter_factory(output_format, self.config.output_dir) for output_format in formats
        ]

    @contextmanager
    def _timed(self, key: str) -> Iterator[None]:
        start_time = time.time()
        yield
        self.metrics[key] = time.time() - start_time
        logger.info(f"{key} took {self.metrics[key]:.3f} seconds")

    def _export(self, method: str, *args: Any) -> None:
        for exporter in self.exporters:
            self.written.extend(getattr(exporter, method)(self.scenario.name, *args))

    def operating_point(self) -> AssembledCase:
        """Solve the equilibrium and write the operating-point report."""
        with self._timed("operating_point"):
            case = assemble_scenario(self.scenario)
        self._export("export_operating_point", case, self.scenario.machines)
        logger.info(f"Solved operating point of '{self.scenario.name}'")
        return case

    def modal(self) -> ModeSet:
        """Assemble the linear model and classify its modes."""
        with self._timed("modal"):
            case = assemble_scenario(self.scenario)
            modes = analyze(case.model)
        self._export("export_modes", modes)
        logger.info(
            f"Found {len(modes)} modes ({modes.eigenvalue_count} eigenvalues) "
            f"for '{self.scenario.name}'"
        )
        return modes

    def sweep(
        self,
        parameter: Optional[str] = None,
        start: Optional[float] = None,
        stop: Optional[float] = None,
        points: Optional[int] = None,
    ) -> SweepResult:
        """
        Sweep one parameter, taking unset grid bounds from the scenario's sweep block.

        Raises:
            ScenarioError: If the grid is incomplete or invalid
        """
        spec = self.scenario.sweep
        values: Dict[str, Any] = spec.model_dump(by_alias=True) if spec is not None else {}
        overrides = {"param": parameter, "from": start, "to": stop, "points": points}
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            grid_spec = SweepSpec.model_validate(values)
        except ValidationError as exc:
            raise ScenarioError(validation_messages(exc, prefix="sweep"))

        with self._timed("sweep"):
            result = sweep(self.scenario, grid_spec.param, grid_spec.grid(), self.config)
        self._export("export_sweep", result)
        return result

    def simulate(self, dt: Optional[float] = None, t_end: Optional[float] = None) -> TimeSeries:
        """
        Step response of the scenario's linear model.

        A relative step is scaled by the operating value of its input. Speed
        channels are reported in Hz.
        """
        spec = self._sim_spec(dt, t_end)
        two_machine = not self.scenario.is_single_machine
        with self._timed("simulation"):
            case = assemble_scenario(
                self.scenario, outputs=spec.outputs if two_machine else None
            )
            magnitude = spec.magnitude
            if spec.relative:
                magnitude *= self._operating_value(spec.input, case)
            series = step_response(
                case.model,
                spec.input,
                magnitude,
                spec.t_end,
                spec.dt,
                outputs=None if two_machine else spec.outputs,
            ).in_hz()
        self._export("export_series", series)
        logger.info(
            f"Simulated a step of {magnitude:.6g} on {spec.input} over {spec.t_end} s "
            f"({len(series.t)} samples)"
        )
        return series

    def governor_demo(
        self, dt: Optional[float] = None, t_end: Optional[float] = None
    ) -> GovernorModeResult:
        """Run the governor-mode demonstration with the scenario's governor time constants."""
        spec = self._sim_spec(dt, t_end)
        machines = self.scenario.machines
        if len(machines) != 2 or any(machine.Tg is None for machine in machines):
            raise AssemblyError("the governor-mode demonstration needs two gcsg machines")
        with self._timed("governor_demo"):
            result = governor_mode_demo(
                self.scenario,
                Tg1=machines[0].Tg,  # type: ignore[arg-type]
                Tg2=machines[1].Tg,  # type: ignore[arg-type]
                t_end=spec.t_end,
                dt=spec.dt,
            )
        self._export("export_governor_mode", result)
        return result

    def rocof(
        self,
        windows: Optional[Sequence[float]] = None,
        dt: Optional[float] = None,
        t_end: Optional[float] = None,
    ) -> RocofMetrics:
        """
        Windowed RoCoF and nadir of the scenario's aggregate system.

        Raises:
            ScenarioError: If the scenario has no rocof block or an override is invalid
        """
        if self.scenario.rocof is None:
            raise ScenarioError(["rocof: required for a RoCoF study"])
        values = self.scenario.rocof.model_dump()
        overrides = {"windows": list(windows) if windows else None, "dt": dt, "t_end": t_end}
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            spec = RocofSpec.model_validate(values)
        except ValidationError as exc:
            raise ScenarioError(validation_messages(exc, prefix="rocof"))

        with self._timed("rocof"):
            metrics, series = rocof_study(
                spec.aggregate, spec.dP, spec.windows, spec.t_end, spec.dt, f0=self.scenario.base.f0
            )
        self._export("export_rocof", metrics, series)
        return metrics

    def _sim_spec(self, dt: Optional[float], t_end: Optional[float]) -> SimSpec:
        values = self.scenario.sim.model_dump() if self.scenario.sim is not None else {}
        overrides = {"dt": dt, "t_end": t_end}
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return SimSpec.model_validate(values)
        except ValidationError as exc:
            raise ScenarioError(validation_messages(exc, prefix="sim"))

    def _operating_value(self, channel: str, case: AssembledCase) -> float:
        if channel not in RELATIVE_INPUTS:
            raise ScenarioError(
                [f"sim.relative: only {', '.join(RELATIVE_INPUTS)} can be stepped relatively"]
            )
        base = self.scenario.base
        if channel == "R_LD":
            return case.operating_point.R_LD * base.Zb
        return getattr(self.scenario.dispatch, channel) * base.Sbase
