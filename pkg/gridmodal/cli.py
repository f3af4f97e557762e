"""
Command-line interface for GridModal.

Every analysis command takes a scenario, given as a JSON file or as the name
of a bundled fixture, and writes its results to the output directory.
"""

import logging
import sys
from typing import Any, Dict, Optional

import click

from gridmodal import __version__
from gridmodal.config import Config
from gridmodal.engine import Study
from gridmodal.engine.statespace import critical_damping_ranges
from gridmodal.errors import GridModalError, ScenarioError
from gridmodal.exporters.report_exporter import (
    format_governor_mode,
    format_governor_table,
    format_mode_table,
    format_operating_point,
    format_rocof,
)
from gridmodal.scenarios import ScenarioLoader

logger = logging.getLogger("gridmodal")


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    logger.setLevel(level)


def _study(
    scenario: str,
    out: Optional[str],
    svg: bool,
    max_workers: Optional[int],
    progress: bool = False,
) -> Study:
    settings: Dict[str, Any] = {"svg": svg, "show_progress": progress}
    if out:
        settings["output_dir"] = out
    if max_workers:
        settings["max_workers"] = max_workers
    config = Config(**settings)
    return Study(ScenarioLoader().load(scenario), config)


def _fail(command: str, error: Exception) -> None:
    logger.error(f"Error during {command}: {str(error)}")
    if isinstance(error, ScenarioError) and len(error.errors) > 1:
        for message in error.errors:
            click.echo(f"  {message}", err=True)
    if logger.isEnabledFor(logging.DEBUG):
        import traceback

        logger.debug(traceback.format_exc())
    sys.exit(1)


def _parse_windows(value: Optional[str]) -> Optional[list]:
    if not value:
        return None
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated seconds, got '{value}'")


scenario_argument = click.argument("scenario")
out_option = click.option(
    "--out",
    "-o",
    type=click.Path(file_okay=False, dir_okay=True),
    help="Output directory (default: $GRIDMODAL_OUT or ./output).",
)
svg_option = click.option("--svg", is_flag=True, help="Also write SVG plots.")


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages.")
def main(verbose: bool):
    """
    GridModal: small-signal analysis of one- and two-machine microgrids.
    """
    _configure_logging(verbose)


@main.command()
@scenario_argument
@out_option
def op(scenario: str, out: Optional[str]):
    """
    Solve and report the operating point.
    """
    try:
        study = _study(scenario, out, False, None)
        case = study.operating_point()
        click.echo(format_operating_point(study.scenario.name, case, study.scenario.machines))
    except (GridModalError, ValueError) as e:
        _fail("op", e)


@main.command()
@scenario_argument
@out_option
def modal(scenario: str, out: Optional[str]):
    """
    Eigenvalues, frequencies, damping ratios and mode labels.
    """
    try:
        study = _study(scenario, out, False, None)
        modes = study.modal()
        click.echo(format_mode_table(modes), nl=False)
    except (GridModalError, ValueError) as e:
        _fail("modal", e)


@main.command()
@scenario_argument
@out_option
@svg_option
@click.option("--param", help="Parameter to sweep, e.g. H1, D1, R2, Tg1, SCR or k.")
@click.option("--from", "start", type=float, help="First grid value.")
@click.option("--to", "stop", type=float, help="Last grid value.")
@click.option("--points", type=click.IntRange(min=2), help="Number of grid points.")
@click.option("--max-workers", type=click.IntRange(min=1), help="Maximum parallel workers.")
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr.")
def sweep(
    scenario: str,
    out: Optional[str],
    svg: bool,
    param: Optional[str],
    start: Optional[float],
    stop: Optional[float],
    points: Optional[int],
    max_workers: Optional[int],
    progress: bool,
):
    """
    Root locus of the modes over one parameter.
    """
    try:
        study = _study(scenario, out, svg, max_workers, progress)
        result = study.sweep(param, start, stop, points)
        click.echo(
            f"Swept {result.parameter} over {len(result.values)} points: "
            f"{len(result.trajectories)} trajectories, {len(result.failures)} failed points"
        )
        for path in study.written:
            click.echo(f"wrote {path}")
    except (GridModalError, ValueError) as e:
        _fail("sweep", e)


@main.command()
@scenario_argument
@out_option
@svg_option
@click.option("--dt", type=float, help="Sample step, s.")
@click.option("--tend", "t_end", type=float, help="Simulation horizon, s.")
def sim(scenario: str, out: Optional[str], svg: bool, dt: Optional[float], t_end: Optional[float]):
    """
    Step response of the linear model.
    """
    try:
        study = _study(scenario, out, svg, None)
        series = study.simulate(dt, t_end)
        click.echo(f"Simulated {', '.join(series.names)} over {len(series.t)} samples")
        if study.scenario.sim is not None and study.scenario.sim.governor_demo:
            click.echo(format_governor_mode(study.governor_demo(dt, t_end)), nl=False)
        for path in study.written:
            click.echo(f"wrote {path}")
    except (GridModalError, ValueError) as e:
        _fail("sim", e)


@main.command()
@scenario_argument
@out_option
@click.option("--windows", help="Comma-separated RoCoF windows, s (e.g. 0.05,0.5).")
@click.option("--dt", type=float, help="Sample step, s.")
@click.option("--tend", "t_end", type=float, help="Simulation horizon, s.")
def rocof(
    scenario: str,
    out: Optional[str],
    windows: Optional[str],
    dt: Optional[float],
    t_end: Optional[float],
):
    """
    RoCoF and frequency nadir after a generation loss.
    """
    window_list = _parse_windows(windows)
    try:
        study = _study(scenario, out, False, None)
        metrics = study.rocof(window_list, dt, t_end)
        click.echo(format_rocof(metrics), nl=False)
    except (GridModalError, ValueError) as e:
        _fail("rocof", e)


@main.command()
def governors():
    """
    Droop and natural frequency of typical governors at critical-damping tuning.
    """
    click.echo(format_governor_table(critical_damping_ranges()), nl=False)


if __name__ == "__main__":
    main()
