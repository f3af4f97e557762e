"""
Data models for GridModal.

Inputs are validated pydantic models; analysis results are immutable dataclasses.
"""

from gridmodal.models.aggregate import AggregateSystem, PrimaryRegulation, SecondaryRegulation
from gridmodal.models.machine import BaseSystem, MachineKind, MachineParams, MachineRating
from gridmodal.models.modes import (
    Mode,
    ModeLabel,
    ModeSet,
    ModeTrajectory,
    SweepResult,
    TrajectoryPoint,
)
from gridmodal.models.network import Dispatch, NetworkParams, NetworkShape
from gridmodal.models.operating import (
    LinCoeffs,
    OperatingPoint,
    ReducedNetwork,
    SingleMachinePoint,
)
from gridmodal.models.scenario import (
    OPERATING_POINT_PARAMETERS,
    NetworkSpec,
    RocofSpec,
    Scenario,
    SimSpec,
    SweepSpec,
)
from gridmodal.models.statespace import SecondOrderSummary, StateSpaceModel
from gridmodal.models.timeseries import GovernorModeResult, RocofMetrics, TimeSeries

__all__ = [
    "AggregateSystem",
    "BaseSystem",
    "Dispatch",
    "GovernorModeResult",
    "LinCoeffs",
    "MachineKind",
    "MachineParams",
    "MachineRating",
    "Mode",
    "ModeLabel",
    "ModeSet",
    "ModeTrajectory",
    "NetworkParams",
    "NetworkShape",
    "NetworkSpec",
    "OPERATING_POINT_PARAMETERS",
    "OperatingPoint",
    "PrimaryRegulation",
    "ReducedNetwork",
    "RocofMetrics",
    "RocofSpec",
    "Scenario",
    "SecondOrderSummary",
    "SecondaryRegulation",
    "SimSpec",
    "SingleMachinePoint",
    "StateSpaceModel",
    "SweepResult",
    "SweepSpec",
    "TimeSeries",
    "TrajectoryPoint",
]
