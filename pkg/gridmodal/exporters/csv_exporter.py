"""
CSV exporter for GridModal analysis results.

All files are UTF-8, comma-separated, with a header row, "\n" line endings
and floats written with six significant digits.
"""

import csv
import logging
from typing import Dict, List, Tuple

from gridmodal.exporters.base import BaseExporter, format_float
from gridmodal.models import GovernorModeResult, ModeSet, RocofMetrics, SweepResult, TimeSeries
from gridmodal.models.modes import damping_ratio, natural_frequency_hz

logger = logging.getLogger("gridmodal.exporters.csv")

MODE_FIELDS = ["mode", "label", "real", "imag", "freq_hz", "zeta"]
SWEEP_FIELDS = ["parameter", "value", "trajectory", "label", "real", "imag", "freq_hz", "zeta"]


def _oscillation_cells(eigenvalue: complex) -> Tuple[str, str]:
    # real eigenvalues carry no frequency or damping ratio
    if eigenvalue.imag == 0.0:
        return "", ""
    return format_float(natural_frequency_hz(eigenvalue)), format_float(damping_ratio(eigenvalue))


class CSVExporter(BaseExporter):
    """
    Exporter for CSV format.

    Writes the mode table, sweep trajectories, simulated trajectories and
    RoCoF metrics of a scenario as separate files named after the scenario.
    """

    def _write(self, filename: str, fieldnames: List[str], rows: List[Dict[str, str]]) -> str:
        with self._open(filename) as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        logger.info(f"Wrote {len(rows)} rows to {filename}")
        return self.get_output_path(filename)

    def export_modes(self, name: str, modes: ModeSet) -> List[str]:
        participation_fields = [f"participation_{state}" for state in modes.state_labels]
        rows = []
        for number, mode in enumerate(modes, start=1):
            freq_hz, zeta = _oscillation_cells(mode.eigenvalue)
            row = {
                "mode": str(number),
                "label": mode.label.value,
                "real": format_float(mode.eigenvalue.real),
                "imag": format_float(mode.eigenvalue.imag),
                "freq_hz": freq_hz,
                "zeta": zeta,
            }
            for state, fieldname in zip(modes.state_labels, participation_fields):
                row[fieldname] = format_float(mode.participation.get(state, 0.0))
            rows.append(row)
        return [self._write(f"{name}.modes.csv", MODE_FIELDS + participation_fields, rows)]

    def export_sweep(self, name: str, result: SweepResult) -> List[str]:
        position = {float(value): index for index, value in enumerate(result.values)}
        entries = [
            (position[point.value], trajectory.id, point)
            for trajectory in result.trajectories
            for point in trajectory.points
        ]
        entries.sort(key=lambda entry: (entry[0], entry[1]))

        rows = []
        for _, trajectory_id, point in entries:
            freq_hz, zeta = _oscillation_cells(point.eigenvalue)
            rows.append(
                {
                    "parameter": result.parameter,
                    "value": format_float(point.value),
                    "trajectory": str(trajectory_id),
                    "label": point.label.value,
                    "real": format_float(point.eigenvalue.real),
                    "imag": format_float(point.eigenvalue.imag),
                    "freq_hz": freq_hz,
                    "zeta": zeta,
                }
            )
        return [self._write(f"{name}.sweep.csv", SWEEP_FIELDS, rows)]

    def _write_series(self, filename: str, series: TimeSeries) -> str:
        fieldnames = ["t"] + series.names
        rows = []
        for k, t in enumerate(series.t):
            row = {"t": format_float(t)}
            for channel in series.names:
                row[channel] = format_float(series[channel][k])
            rows.append(row)
        return self._write(filename, fieldnames, rows)

    def export_series(self, name: str, series: TimeSeries) -> List[str]:
        return [self._write_series(f"{name}.sim.csv", series)]

    def export_rocof(self, name: str, metrics: RocofMetrics, series: TimeSeries) -> List[str]:
        rows = [{"metric": key, "value": format_float(value)} for key, value in metrics.rows()]
        return [
            self._write(f"{name}.rocof.csv", ["metric", "value"], rows),
            self._write_series(f"{name}.rocof_trajectory.csv", series),
        ]

    def export_governor_mode(self, name: str, result: GovernorModeResult) -> List[str]:
        return [self._write_series(f"{name}.govmode.csv", result.series)]
