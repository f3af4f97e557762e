"""
GridModal - small-signal models of one- and two-machine microgrids.

Network reduction, operating point, state-space assembly, modal analysis,
parameter sweeps and linear time-domain simulation for governor-controlled
generators and grid-forming converters.
"""

__version__ = "0.1.0"

from gridmodal.config import Config  # noqa: E402
from gridmodal.engine import Study, analyze, assemble_scenario  # noqa: E402
from gridmodal.errors import GridModalError  # noqa: E402
from gridmodal.models import MachineParams, Scenario  # noqa: E402
from gridmodal.scenarios import ScenarioLoader, parse_scenario  # noqa: E402

__all__ = [
    "Config",
    "GridModalError",
    "MachineParams",
    "Scenario",
    "ScenarioLoader",
    "Study",
    "analyze",
    "assemble_scenario",
    "parse_scenario",
]
