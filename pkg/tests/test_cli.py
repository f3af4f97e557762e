"""
Tests for the GridModal command-line interface.
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

from click.testing import CliRunner

from gridmodal.cli import main


class TestCLI(unittest.TestCase):
    """
    Test the command-line interface functionality.
    """

    def setUp(self):
        """Set up the test case."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.output_dir = self.temp_dir.name
        self.runner = CliRunner()

    def tearDown(self):
        """Clean up after the test case."""
        self.temp_dir.cleanup()

    def invoke(self, *args):
        return self.runner.invoke(main, list(args))

    def test_cli_help(self):
        """The help lists every command."""
        result = subprocess.run(
            [sys.executable, "-m", "gridmodal.cli", "--help"],
            capture_output=True,
            text=True,
        )
        self.assertEqual(result.returncode, 0)
        self.assertIn("GridModal", result.stdout)
        for command in ("op", "modal", "sweep", "sim", "rocof", "governors"):
            self.assertIn(command, result.stdout)

    def test_op(self):
        """The operating-point report shows the load and voltage."""
        result = self.invoke("op", "case1a", "--out", self.output_dir)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Operating point: case1a", result.output)
        self.assertIn("R_LD", result.output)
        self.assertTrue(os.path.exists(os.path.join(self.output_dir, "case1a.op.txt")))

    def test_modal(self):
        """The mode table is printed and written as CSV."""
        result = self.invoke("modal", "case1a", "--out", self.output_dir)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Mode, Eigenvalue, Freq (Hz), zeta", result.output)
        self.assertIn(", 1.986, 0.009", result.output)
        self.assertTrue(os.path.exists(os.path.join(self.output_dir, "case1a.modes.csv")))

    def test_sweep(self):
        """Grid options override the scenario's sweep block."""
        result = self.invoke(
            "sweep", "case1b", "--out", self.output_dir,
            "--param", "H1", "--from", "4", "--to", "1", "--points", "4",
        )  # fmt: skip
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Swept H1 over 4 points", result.output)
        self.assertIn("case1b.sweep.csv", result.output)

    def test_sweep_progress_bar(self):
        """The progress flag draws a bar for the sweep and keeps the summary on stdout."""
        result = self.invoke(
            "sweep", "case1b", "--out", self.output_dir, "--param", "H1",
            "--from", "4", "--to", "1", "--points", "12", "--max-workers", "1", "--progress",
        )  # fmt: skip
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Swept H1 over 12 points", result.output)
        self.assertIn("sweep H1", result.output)
        self.assertIn("12/12", result.output)

    def test_sim_with_governor_demo(self):
        """The governor fixture also reports its governor mode."""
        result = self.invoke("sim", "govmode", "--out", self.output_dir, "--tend", "5")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Simulated omega1_hz, omega2_hz, Pm1, Pm2", result.output)
        self.assertIn("governor_eigenvalue, -", result.output)

    def test_rocof_alias(self):
        """The low-inertia case settles at a 0.25 Hz deviation."""
        result = self.invoke("rocof", "lowHlowR", "--out", self.output_dir)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("nadir, -0.25", result.output)
        self.assertIn("rocof_50ms, ", result.output)

    def test_rocof_bad_windows(self):
        """Windows that are not numbers are a usage error."""
        result = self.invoke("rocof", "lowHlowR", "--out", self.output_dir, "--windows", "a,b")
        self.assertEqual(result.exit_code, 2)

    def test_governors(self):
        """The technology table needs no scenario."""
        result = self.invoke("governors")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("Hydro, 0.20-0.50, 3-9, 0.022-0.167, 0.23-0.56", result.output)

    def test_invalid_scenario_file(self):
        """A scenario with errors exits with status 1 and names each problem."""
        path = os.path.join(self.output_dir, "bad.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"name": "bad", "network": {"SCR": 4.0, "k": 1.2}}, f)
        result = subprocess.run(
            [sys.executable, "-m", "gridmodal.cli", "modal", path, "--out", self.output_dir],
            capture_output=True,
            text=True,
        )
        self.assertEqual(result.returncode, 1)
        self.assertIn("network.k", result.stderr)

    def test_unknown_scenario(self):
        """An unknown fixture name is reported."""
        result = self.invoke("op", "no-such-case", "--out", self.output_dir)
        self.assertEqual(result.exit_code, 1)

    def test_missing_argument(self):
        """A missing scenario is a usage error."""
        result = self.invoke("modal")
        self.assertEqual(result.exit_code, 2)


if __name__ == "__main__":
    unittest.main()
