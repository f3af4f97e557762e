"""
Scenario lookup by file path or bundled fixture name.
"""

import logging
import os
from pathlib import Path
from typing import List, Optional

from gridmodal.errors import ScenarioError
from gridmodal.models import Scenario

logger = logging.getLogger("gridmodal.scenarios")

FIXTURES_DIR = Path(__file__).parent / "fixtures"

# Alternative names of bundled fixtures
ALIASES = {
    "lowHlowR": "rocof-lowH",
    "conventional": "rocof-conventional",
}


class ScenarioLoader:
    """
    Loads scenarios from JSON files or from the bundled fixtures.
    """

    def __init__(self, fixtures_dir: Optional[str] = None):
        """
        Initialize the scenario loader.

        Args:
            fixtures_dir: Directory of named fixtures, the bundled set by default
        """
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else FIXTURES_DIR

    def available(self) -> List[str]:
        """Names of the fixtures that can be loaded by name."""
        return sorted(path.stem for path in self.fixtures_dir.glob("*.json"))

    def resolve(self, reference: str) -> Path:
        """
        Map a file path or fixture name (or alias) to a scenario file.

        Raises:
            ScenarioError: If the reference is neither
        """
        if os.path.isfile(reference):
            return Path(reference)
        name = ALIASES.get(reference, reference)
        candidate = self.fixtures_dir / f"{name}.json"
        if candidate.is_file():
            return candidate
        raise ScenarioError(
            [
                f"scenario '{reference}' is neither a file nor a bundled fixture "
                f"({', '.join(self.available())})"
            ]
        )

    def load(self, reference: str) -> Scenario:
        """
        Load and validate a scenario.

        Args:
            reference: Path to a JSON document, or the name of a bundled fixture

        Returns:
            The validated scenario
        """
        from gridmodal.scenarios import parse_scenario

        path = self.resolve(reference)
        logger.debug(f"Loading scenario from {path}")
        return parse_scenario(path.read_text(encoding="utf-8"))
