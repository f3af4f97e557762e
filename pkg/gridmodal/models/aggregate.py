"""
Single-bus aggregate system used by the RoCoF and nadir study.
"""

from typing import Optional

from pydantic import Field, model_validator

from gridmodal.models.base import GridModalBaseModel


class PrimaryRegulation(GridModalBaseModel):
    """First-order governor acting on the frequency deviation."""

    R: float = Field(..., gt=0, description="Droop, pu")
    tau: float = Field(..., gt=0, description="Governor time constant, s")


class SecondaryRegulation(GridModalBaseModel):
    """Integral action on the frequency error feeding the power balance."""

    Ki: float = Field(0.1, gt=0, description="Integral gain, pu/(pu s)")


class AggregateSystem(GridModalBaseModel):
    """Equivalent inertia with natural damping and optional frequency regulation."""

    H: float = Field(..., gt=0, description="Equivalent inertia constant, s")
    R_natural: Optional[float] = Field(None, gt=0, description="Natural droop, pu")
    primary: Optional[PrimaryRegulation] = None
    secondary: Optional[SecondaryRegulation] = None

    @model_validator(mode="after")
    def _check_regulation(self) -> "AggregateSystem":
        if self.R_natural is None and self.primary is None:
            raise ValueError("aggregate system needs R_natural or primary regulation")
        return self

    @property
    def damping(self) -> float:
        return 0.0 if self.R_natural is None else 1.0 / self.R_natural
