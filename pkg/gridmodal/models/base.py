"""
Base model for all GridModal input models.
"""

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict


class GridModalBaseModel(BaseModel):
    """Base model shared by every validated input structure."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    def to_dict(self) -> Dict[str, Any]:
        """Convert the model to a dictionary keyed by the document aliases."""
        return self.model_dump(by_alias=True, exclude_none=True)
