"""
Tests for per-unit conversions and the short-circuit ratio.
"""

import math
import unittest

from gridmodal.engine.perunit import (
    damping_pu,
    damping_si,
    droop_pu,
    droop_si,
    inertia_constant,
    momentum,
    scr,
    x_from_scr,
)
from gridmodal.models import BaseSystem


class TestPerUnit(unittest.TestCase):
    """
    Test the conversions between machine-base pu and system quantities.
    """

    def setUp(self):
        """Set up the test case."""
        self.base = BaseSystem()

    def test_momentum_on_50hz_base(self):
        """M = 2 H S / omega_b for a half-rated machine with H = 4 s."""
        self.assertAlmostEqual(momentum(4.0, 0.5, self.base), 4.0 / (100.0 * math.pi), places=15)

    def test_damping_and_droop(self):
        """D scales with the rating and R inversely."""
        self.assertAlmostEqual(damping_si(20.0, 0.5, self.base), 10.0 / (100.0 * math.pi))
        self.assertAlmostEqual(droop_si(0.05, 0.5, self.base), 0.05 * 100.0 * math.pi / 0.5)

    def test_round_trips(self):
        """Every SI quantity converts back to the pu value it came from."""
        base = BaseSystem(f0=60.0, Sbase=2.5e6, Vbase=400.0)
        self.assertAlmostEqual(inertia_constant(momentum(3.2, 0.4, base), 0.4, base), 3.2)
        self.assertAlmostEqual(damping_pu(damping_si(15.0, 0.4, base), 0.4, base), 15.0)
        self.assertAlmostEqual(droop_pu(droop_si(0.04, 0.4, base), 0.4, base), 0.04)

    def test_scr_and_inverse(self):
        """SCR = 1/(X k (1-k)); the reference cases with SCR 4 and k = 0.5 have X = 1."""
        self.assertAlmostEqual(x_from_scr(4.0, 0.5), 1.0)
        self.assertAlmostEqual(scr(1.0, 0.5), 4.0)
        self.assertAlmostEqual(scr(x_from_scr(6.5, 0.25), 0.25), 6.5)

    def test_invalid_inputs(self):
        """Non-physical values are rejected."""
        with self.assertRaises(ValueError):
            momentum(-1.0, 0.5, self.base)
        with self.assertRaises(ValueError):
            momentum(1.0, 0.0, self.base)
        with self.assertRaises(ValueError):
            scr(1.0, 1.0)
        with self.assertRaises(ValueError):
            x_from_scr(0.0, 0.5)


if __name__ == "__main__":
    unittest.main()
