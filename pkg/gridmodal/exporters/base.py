"""
Base exporter for GridModal analysis results.

This module defines the class that all exporters inherit from and the float
formatting shared by every machine-readable file.
"""

import logging
import math
import os
from typing import TYPE_CHECKING, List, Sequence

from gridmodal.models import (
    GovernorModeResult,
    MachineParams,
    ModeSet,
    RocofMetrics,
    SweepResult,
    TimeSeries,
)

if TYPE_CHECKING:
    from gridmodal.engine.statespace import AssembledCase

logger = logging.getLogger("gridmodal.exporters")


def format_float(value: float) -> str:
    """Six significant digits, with negative zero written as 0."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    text = f"{value:.6g}"
    if text in ("-0", "0"):
        return "0"
    return text


class BaseExporter:
    """
    Base class for all exporters.

    Each hook writes the files of one kind of result and returns their paths.
    The defaults write nothing, so an exporter only overrides the results it
    has a format for.
    """

    def __init__(self, output_dir: str):
        """
        Initialize the exporter.

        Args:
            output_dir: Directory where output files will be written
        """
        self.output_dir = output_dir
        os.makedirs(self.output_dir, exist_ok=True)

    def get_output_path(self, filename: str) -> str:
        """Get the full path for an output file."""
        return os.path.join(self.output_dir, filename)

    def _open(self, filename: str):
        path = self.get_output_path(filename)
        logger.debug(f"Writing {path}")
        return open(path, "w", encoding="utf-8", newline="")

    def export_operating_point(
        self, name: str, case: "AssembledCase", machines: Sequence[MachineParams]
    ) -> List[str]:
        return []

    def export_modes(self, name: str, modes: ModeSet) -> List[str]:
        return []

    def export_sweep(self, name: str, result: SweepResult) -> List[str]:
        return []

    def export_series(self, name: str, series: TimeSeries) -> List[str]:
        return []

    def export_rocof(self, name: str, metrics: RocofMetrics, series: TimeSeries) -> List[str]:
        return []

    def export_governor_mode(self, name: str, result: GovernorModeResult) -> List[str]:
        return []
