"""
Optional SVG plots of sweeps and simulated trajectories.

Rendered with matplotlib's non-interactive SVG backend. Ids are salted with
a fixed string and the date is omitted, so equal inputs give equal files.
"""

import logging
from typing import List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from gridmodal.exporters.base import BaseExporter  # noqa: E402
from gridmodal.models import GovernorModeResult, SweepResult, TimeSeries  # noqa: E402

logger = logging.getLogger("gridmodal.exporters.svg")

SVG_SETTINGS = {"svg.hashsalt": "gridmodal", "svg.fonttype": "none"}


class SVGExporter(BaseExporter):
    """Exporter for root-locus and time-series plots."""

    def _save(self, fig, filename: str) -> str:
        path = self.get_output_path(filename)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
        logger.info(f"Wrote plot {filename}")
        return path

    def export_sweep(self, name: str, result: SweepResult) -> List[str]:
        with plt.rc_context(SVG_SETTINGS):
            fig, ax = plt.subplots(figsize=(7, 5))
            for trajectory in result.trajectories:
                eigenvalues = trajectory.eigenvalues
                ax.plot(
                    eigenvalues.real,
                    eigenvalues.imag,
                    marker=".",
                    linewidth=1.0,
                    label=f"{trajectory.id} {trajectory.label.value}",
                )
            ax.axvline(0.0, color="black", linewidth=0.5)
            ax.set_xlabel("Real part (1/s)")
            ax.set_ylabel("Imaginary part (rad/s)")
            ax.set_title(f"{name}: root locus over {result.parameter}")
            ax.grid(True)
            if result.trajectories:
                ax.legend(fontsize="small")
            return [self._save(fig, f"{name}.sweep.svg")]

    def _plot_series(self, title: str, series: TimeSeries, filename: str) -> str:
        with plt.rc_context(SVG_SETTINGS):
            rows = len(series.names)
            fig, axes = plt.subplots(rows, 1, sharex=True, squeeze=False, figsize=(7, 2.2 * rows))
            for ax, channel in zip(axes[:, 0], series.names):
                ax.plot(series.t, series[channel], linewidth=1.0)
                unit = series.units.get(channel, "")
                ax.set_ylabel(f"{channel} ({unit})" if unit else channel)
                ax.grid(True)
            axes[-1, 0].set_xlabel("Time (s)")
            axes[0, 0].set_title(title)
            return self._save(fig, filename)

    def export_series(self, name: str, series: TimeSeries) -> List[str]:
        return [self._plot_series(f"{name}: step response", series, f"{name}.sim.svg")]

    def export_governor_mode(self, name: str, result: GovernorModeResult) -> List[str]:
        return [
            self._plot_series(f"{name}: governor mode", result.series, f"{name}.govmode.svg")
        ]
