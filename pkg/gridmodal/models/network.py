"""
Network models for the three-bus microgrid.

Generator #1 sits on bus 1, generator #2 on bus 2 and the resistive load on
bus 3, which splits the tie reactance X into kX and (1-k)X.
"""

from pydantic import Field, model_validator

from gridmodal.models.base import GridModalBaseModel


class NetworkShape(GridModalBaseModel):
    """Tie reactance, load split point and generator voltage magnitudes (pu)."""

    X: float = Field(..., gt=0, description="Total tie reactance between generator buses")
    k: float = Field(0.5, gt=0, lt=1, description="Load split point")
    V1: float = Field(1.0, gt=0, description="Generator #1 terminal voltage magnitude")
    V2: float = Field(1.0, gt=0, description="Generator #2 terminal voltage magnitude")

    def with_load(self, R_LD: float) -> "NetworkParams":
        """Attach a load resistance to this shape."""
        return NetworkParams(X=self.X, k=self.k, V1=self.V1, V2=self.V2, R_LD=R_LD)


class NetworkParams(NetworkShape):
    """Complete network description including the load resistance."""

    R_LD: float = Field(..., gt=0, description="Load resistance")

    @property
    def shape(self) -> NetworkShape:
        return NetworkShape(X=self.X, k=self.k, V1=self.V1, V2=self.V2)

    def swapped(self) -> "NetworkParams":
        """The same network with the generator labels exchanged."""
        return NetworkParams(X=self.X, k=1.0 - self.k, V1=self.V2, V2=self.V1, R_LD=self.R_LD)


class Dispatch(GridModalBaseModel):
    """Power setpoints of both generators on the system base (pu)."""

    Pref1: float = Field(..., ge=0)
    Pref2: float = Field(0.0, ge=0)

    @model_validator(mode="after")
    def _check_total(self) -> "Dispatch":
        if self.Pref1 + self.Pref2 <= 0:
            raise ValueError("Pref1 + Pref2 must be positive")
        return self

    @property
    def total(self) -> float:
        return self.Pref1 + self.Pref2
