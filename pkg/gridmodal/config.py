"""
Run configuration for GridModal.

Scenario documents carry the physics of a study. This dataclass only carries
how the analyses are run and where their results are written.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class Config:
    """Configuration settings for an analysis run."""

    # Paths
    output_dir: str = field(default_factory=lambda: os.environ.get("GRIDMODAL_OUT", "output"))

    # Export options
    svg: bool = False

    # Performance
    max_workers: int = field(default_factory=lambda: os.cpu_count() or 4)
    show_progress: bool = False

    # Sweep trajectory tracking, largest eigenvalue jump between grid points (1/s)
    jump_threshold: float = 10.0

    def __post_init__(self) -> None:
        """Validate and initialize configuration parameters."""
        self.output_dir = str(Path(self.output_dir).absolute())
        os.makedirs(self.output_dir, exist_ok=True)

        if self.max_workers < 1:
            raise ValueError(f"Invalid max_workers: {self.max_workers}. Must be at least 1")
        if self.jump_threshold <= 0:
            raise ValueError(f"Invalid jump_threshold: {self.jump_threshold}. Must be positive")

    def get_output_path(self, filename: str) -> str:
        """Get the full path for an output file inside the output directory."""
        return os.path.join(self.output_dir, filename)
