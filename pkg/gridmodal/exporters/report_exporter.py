"""
Plain-text reports for GridModal analysis results.

The formatting functions are shared by the report files and the command-line
output, so both always show the same numbers.
"""

import logging
import math
from typing import TYPE_CHECKING, List, Sequence

from gridmodal.exporters.base import BaseExporter, format_float
from gridmodal.models import (
    GovernorModeResult,
    MachineParams,
    Mode,
    ModeLabel,
    ModeSet,
    OperatingPoint,
    RocofMetrics,
)

if TYPE_CHECKING:
    from gridmodal.engine.statespace import AssembledCase, CriticalDampingRange

logger = logging.getLogger("gridmodal.exporters.report")

LABEL_ORDER = [
    ModeLabel.SWING,
    ModeLabel.TURBINE_GOVERNOR,
    ModeLabel.GOVERNOR,
    ModeLabel.REAL,
    ModeLabel.UNCLASSIFIED,
]


def fixed(value: float, decimals: int) -> str:
    """Fixed-point text without a sign on values that round to zero."""
    text = f"{value:.{decimals}f}"
    if float(text) == 0.0:
        return text.lstrip("-")
    return text


def format_eigenvalue(eigenvalue: complex, decimals: int = 3) -> str:
    """``-0.118 ± 12.476j`` for a complex pair, ``-3.766`` for a real eigenvalue."""
    real = fixed(eigenvalue.real, decimals)
    if eigenvalue.imag == 0.0:
        return real
    return f"{real} ± {fixed(abs(eigenvalue.imag), decimals)}j"


def _mode_row(number: int, mode: Mode) -> str:
    if mode.is_complex:
        freq, zeta = fixed(mode.freq_hz, 3), fixed(mode.zeta, 3)
    else:
        freq, zeta = "---", "---"
    return f"#{number} {mode.label.value}, {format_eigenvalue(mode.eigenvalue)}, {freq}, {zeta}"


def format_mode_table(modes: ModeSet) -> str:
    """Mode table ordered by label, one row per eigenvalue or conjugate pair."""
    lines = ["Mode, Eigenvalue, Freq (Hz), zeta"]
    number = 0
    for label in LABEL_ORDER:
        for mode in modes.by_label(label):
            number += 1
            lines.append(_mode_row(number, mode))
    return "\n".join(lines) + "\n"


def format_operating_point(
    name: str, case: "AssembledCase", machines: Sequence[MachineParams]
) -> str:
    """Operating-point report with angles in degrees."""
    point = case.operating_point
    rows: List[tuple] = []
    if isinstance(point, OperatingPoint):
        rows += [
            ("R_LD", point.R_LD, "pu"),
            ("|V3|", point.V3, "pu"),
            ("G_LD", point.load_conductance, "pu"),
            ("delta12", point.delta12_deg, "deg"),
            ("delta13", point.delta13_deg, "deg"),
            ("delta23", point.delta23_deg, "deg"),
            ("Pe1", point.Pe1, "pu"),
            ("Pe2", point.Pe2, "pu"),
        ]
    else:
        rows += [
            ("R_LD", point.R_LD, "pu"),
            ("|V_load|", point.V_load, "pu"),
            ("G_LD", point.load_conductance, "pu"),
            ("load_angle", math.degrees(point.load_angle), "deg"),
            ("Pe1", point.Pe, "pu"),
        ]
    if case.coefficients is not None:
        lin = case.coefficients
        rows += [
            ("Klin1", lin.Klin1, "pu/rad"),
            ("Klin2", lin.Klin2, "pu/rad"),
            ("d1", lin.d1, "pu/pu"),
            ("d2", lin.d2, "pu/pu"),
        ]

    lines = [f"Operating point: {name}"]
    lines += [f"  {key:<10} {format_float(value):>12} {unit}" for key, value, unit in rows]
    for index, machine in enumerate(machines, start=1):
        if machine.is_gfm:
            lines.append(
                f"  machine {index} is gfm: implied power filter Tf = 2HR = "
                f"{format_float(machine.implied_filter_constant)} s"
            )
    return "\n".join(lines) + "\n"


def format_rocof(metrics: RocofMetrics) -> str:
    """RoCoF metrics as ``metric, value`` lines with two decimals."""
    return "".join(f"{key}, {fixed(value, 2)}\n" for key, value in metrics.rows())


def format_governor_mode(result: GovernorModeResult) -> str:
    eigenvalue = "---" if result.eigenvalue is None else fixed(result.eigenvalue, 3)
    return (
        f"governor_eigenvalue, {eigenvalue}\n"
        f"weighted_Tg, {fixed(result.weighted_time_constant, 3)}\n"
        f"settling_time_95, {fixed(result.settling_time, 2)}\n"
        f"decay_rate, {fixed(result.decay_rate, 3)}\n"
    )


def format_governor_table(rows: Sequence["CriticalDampingRange"]) -> str:
    """Technology table of droop and natural frequency at critical-damping tuning."""
    lines = ["Technology, Tg (s), H (s), R (pu), fn (Hz)"]
    for row in rows:
        lines.append(
            f"{row.technology}, {row.Tg[0]:.2f}-{row.Tg[1]:.2f}, {row.H[0]:.0f}-{row.H[1]:.0f}, "
            f"{row.R[0]:.3f}-{row.R[1]:.3f}, {row.fn[0]:.2f}-{row.fn[1]:.2f}"
        )
    return "\n".join(lines) + "\n"


class ReportExporter(BaseExporter):
    """Exporter for the human-readable operating-point, mode and governor-mode reports."""

    def _write_text(self, filename: str, text: str) -> List[str]:
        with self._open(filename) as f:
            f.write(text)
        logger.info(f"Wrote report {filename}")
        return [self.get_output_path(filename)]

    def export_operating_point(
        self, name: str, case: "AssembledCase", machines: Sequence[MachineParams]
    ) -> List[str]:
        return self._write_text(f"{name}.op.txt", format_operating_point(name, case, machines))

    def export_modes(self, name: str, modes: ModeSet) -> List[str]:
        return self._write_text(f"{name}.modes.txt", format_mode_table(modes))

    def export_governor_mode(self, name: str, result: GovernorModeResult) -> List[str]:
        return self._write_text(f"{name}.govmode.txt", format_governor_mode(result))
