"""
Machine and base-system models.

Ratings and control parameters are given in per unit on the machine base;
the per-unit layer converts them to the system base before assembly.
"""

import math
from enum import Enum
from typing import Optional

from pydantic import Field, model_validator

from gridmodal.models.base import GridModalBaseModel


class BaseSystem(GridModalBaseModel):
    """System base quantities."""

    f0: float = Field(50.0, gt=0, description="Base frequency, Hz")
    Sbase: float = Field(1.0, gt=0, description="System power base, W or 1.0 in pure pu")
    Vbase: float = Field(1.0, gt=0, description="Line-to-line RMS voltage base")

    @property
    def omega_b(self) -> float:
        return 2.0 * math.pi * self.f0

    @property
    def Zb(self) -> float:
        return self.Vbase**2 / self.Sbase


class MachineKind(str, Enum):
    """Kind of generating unit."""

    GCSG = "gcsg"
    GFM = "gfm"


class MachineRating(GridModalBaseModel):
    """Rating and per-unit parameters of a generating unit."""

    S_pu: float = Field(1.0, alias="S", gt=0, le=1, description="Rating as a fraction of Sbase")
    H: float = Field(..., ge=0, description="Inertia constant, s")
    D_pu: Optional[float] = Field(None, alias="D", ge=0, description="Damping, pu")
    R_pu: Optional[float] = Field(None, alias="R", gt=0, description="Droop, pu")
    Tg: Optional[float] = Field(None, alias="tau", gt=0, description="Governor time constant, s")


class MachineParams(MachineRating):
    """
    A GC-SG or a droop-based GFM converter.

    A GC-SG needs a droop and a governor time constant and defaults to zero
    damping. A GFM has no governor; its virtual damping is the inverse of its
    droop, so either one may be given.
    """

    kind: MachineKind = MachineKind.GCSG

    @model_validator(mode="after")
    def _check_kind(self) -> "MachineParams":
        if self.kind == MachineKind.GCSG:
            required = (("R", self.R_pu), ("tau", self.Tg))
            missing = [name for name, value in required if value is None]
            if missing:
                raise ValueError(f"gcsg machine requires {', '.join(missing)}")
            if self.D_pu is None:
                self.D_pu = 0.0
        else:
            if self.Tg is not None:
                raise ValueError("gfm machine has no governor; remove tau")
            if self.D_pu is None and self.R_pu is None:
                raise ValueError("gfm machine requires D or R")
            if self.D_pu is None:
                self.D_pu = 1.0 / self.R_pu  # type: ignore[operator]
            elif self.R_pu is None:
                if self.D_pu <= 0:
                    raise ValueError("gfm machine requires D > 0")
                self.R_pu = 1.0 / self.D_pu
            elif abs(self.D_pu * self.R_pu - 1.0) > 1e-9:
                raise ValueError("gfm machine requires D = 1/R")
        return self

    @property
    def is_gfm(self) -> bool:
        return self.kind == MachineKind.GFM

    @property
    def damping(self) -> float:
        return self.D_pu or 0.0

    @property
    def droop(self) -> float:
        return self.R_pu  # type: ignore[return-value]

    @property
    def implied_filter_constant(self) -> Optional[float]:
        """Power filter constant Tf = 2HR (machine base) implied by a GFM's H and droop."""
        if not self.is_gfm:
            return None
        return 2.0 * self.H * self.droop

    def updated(self, **changes: float) -> "MachineParams":
        """Copy with changed parameters, keeping a GFM's damping and droop reciprocal."""
        values = self.model_dump()
        values.update(changes)
        if self.is_gfm:
            if "D_pu" in changes:
                values["R_pu"] = None
            elif "R_pu" in changes:
                values["D_pu"] = None
        return MachineParams(**values)
