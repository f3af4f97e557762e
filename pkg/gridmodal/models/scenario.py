"""
Scenario documents.

A scenario holds the parameters of one study case plus optional blocks that
configure a sweep, a time-domain simulation or a RoCoF study.
"""

from typing import List, Literal, Optional

import numpy as np
from pydantic import Field, model_validator

from gridmodal.models.aggregate import AggregateSystem
from gridmodal.models.base import GridModalBaseModel
from gridmodal.models.machine import BaseSystem, MachineParams
from gridmodal.models.network import Dispatch, NetworkShape

SweepParameter = Literal[
    "H1", "H2", "D1", "D2", "R1", "R2", "Tg1", "Tg2",
    "SCR", "X", "k", "Pref1", "Pref2", "V1", "V2",
]  # fmt: skip

# Parameters that move the equilibrium; the rest only change the dynamics
OPERATING_POINT_PARAMETERS = frozenset({"SCR", "X", "k", "Pref1", "Pref2", "V1", "V2"})

_MACHINE_FIELDS = {"H": "H", "D": "D_pu", "R": "R_pu", "Tg": "Tg"}


class NetworkSpec(GridModalBaseModel):
    """Network block: either the short-circuit ratio or the tie reactance."""

    SCR: Optional[float] = Field(None, gt=0)
    X: Optional[float] = Field(None, gt=0)
    k: float = Field(0.5, gt=0, lt=1)
    V1: float = Field(1.0, gt=0)
    V2: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def _check_strength(self) -> "NetworkSpec":
        if (self.SCR is None) == (self.X is None):
            raise ValueError("give exactly one of SCR or X")
        return self

    def shape(self) -> NetworkShape:
        from gridmodal.engine.perunit import x_from_scr

        X = self.X if self.X is not None else x_from_scr(self.SCR, self.k)  # type: ignore[arg-type]
        return NetworkShape(X=X, k=self.k, V1=self.V1, V2=self.V2)


class SweepSpec(GridModalBaseModel):
    """Parameter grid of a sweep."""

    param: SweepParameter
    from_: float = Field(..., alias="from")
    to: float
    points: int = Field(50, ge=2)
    spacing: Literal["linear", "log"] = "linear"

    @model_validator(mode="after")
    def _check_log(self) -> "SweepSpec":
        if self.spacing == "log" and (self.from_ <= 0 or self.to <= 0):
            raise ValueError("log spacing requires positive bounds")
        return self

    def grid(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.from_, self.to, self.points)
        return np.linspace(self.from_, self.to, self.points)


class SimSpec(GridModalBaseModel):
    """Step-response settings."""

    input: str = "R_LD"
    magnitude: float = -0.01
    relative: bool = True
    t_end: float = Field(10.0, gt=0)
    dt: float = Field(0.01, gt=0)
    outputs: Optional[List[str]] = None
    governor_demo: bool = False

    @model_validator(mode="after")
    def _check_step(self) -> "SimSpec":
        if self.dt > self.t_end / 10:
            raise ValueError("dt must not exceed t_end/10")
        return self


class RocofSpec(GridModalBaseModel):
    """Generation-loss study on the single-bus aggregate."""

    aggregate: AggregateSystem
    dP: float = Field(0.25, gt=0)
    windows: List[float] = Field(default_factory=lambda: [0.05, 0.5])
    t_end: float = Field(10.0, gt=0)
    dt: float = Field(0.001, gt=0)

    @model_validator(mode="after")
    def _check_windows(self) -> "RocofSpec":
        if not self.windows:
            raise ValueError("at least one RoCoF window is required")
        for window in self.windows:
            if not 0 < window < self.t_end:
                raise ValueError(f"window {window} outside (0, t_end)")
        if self.dt > self.t_end / 10:
            raise ValueError("dt must not exceed t_end/10")
        return self


class Scenario(GridModalBaseModel):
    """A complete study case."""

    name: str
    description: str = ""
    base: BaseSystem = Field(default_factory=BaseSystem)
    network: Optional[NetworkSpec] = None
    dispatch: Optional[Dispatch] = None
    machines: List[MachineParams] = Field(default_factory=list)
    sweep: Optional[SweepSpec] = None
    sim: Optional[SimSpec] = None
    rocof: Optional[RocofSpec] = None

    @model_validator(mode="after")
    def _check_machines(self) -> "Scenario":
        if not self.machines:
            if self.rocof is None:
                raise ValueError("machines: at least one machine")
            return self
        if len(self.machines) > 2:
            raise ValueError("machines: at most two machines")
        missing = [key for key in ("network", "dispatch") if getattr(self, key) is None]
        if missing:
            raise ValueError(f"{', '.join(missing)}: required when machines are given")
        return self

    @property
    def is_single_machine(self) -> bool:
        return len(self.machines) == 1

    def network_shape(self) -> NetworkShape:
        if self.network is None:
            raise ValueError(f"scenario '{self.name}' has no network block")
        return self.network.shape()

    def with_parameter(self, name: str, value: float) -> "Scenario":
        """Copy of the scenario with one sweep parameter replaced."""
        if name in ("SCR", "X", "k", "V1", "V2"):
            changes = {name: value}
            if name == "SCR":
                changes["X"] = None
            elif name == "X":
                changes["SCR"] = None
            network = NetworkSpec(**{**self.network.model_dump(), **changes})  # type: ignore
            return self.model_copy(update={"network": network})
        if name in ("Pref1", "Pref2"):
            dispatch = Dispatch(**{**self.dispatch.model_dump(), name: value})  # type: ignore
            return self.model_copy(update={"dispatch": dispatch})

        field_name, index = _MACHINE_FIELDS.get(name[:-1]), name[-1:]
        if field_name is None or index not in ("1", "2"):
            raise ValueError(f"unknown parameter '{name}'")
        position = int(index) - 1
        if position >= len(self.machines):
            raise ValueError(f"parameter '{name}' refers to a missing machine")
        machines = list(self.machines)
        machines[position] = machines[position].updated(**{field_name: value})
        return self.model_copy(update={"machines": machines})
