"""
Tests for the equilibrium solver and the linearization coefficients.
"""

import math
import unittest

from gridmodal.engine.netred import electrical_power, reduced_coefficients
from gridmodal.engine.operating import (
    linearize,
    single_load_sensitivity,
    solve_operating_point,
    solve_single_operating_point,
)
from gridmodal.errors import InfeasibleOperatingPointError
from gridmodal.models import Dispatch, NetworkShape


class TestOperatingPoint(unittest.TestCase):
    """
    Test the two-machine and single-machine equilibria.
    """

    def setUp(self):
        """Set up the test case."""
        self.shape = NetworkShape(X=1.0, k=0.5)
        self.dispatch = Dispatch(Pref1=0.5, Pref2=0.5)

    def test_reference_operating_point(self):
        """SCR 4, k = 0.5 and 0.5 pu per unit give |V3| = 0.9659, R_LD = 0.9330, 15 deg."""
        op = solve_operating_point(self.shape, self.dispatch)
        self.assertAlmostEqual(op.R_LD, 0.9330, delta=0.0005)
        self.assertAlmostEqual(op.V3, 0.9659, delta=0.0005)
        self.assertAlmostEqual(op.delta13_deg, 15.0, delta=0.05)
        self.assertAlmostEqual(op.delta23_deg, 15.0, delta=0.05)
        self.assertEqual(op.delta12, 0.0)

    def test_power_balance_at_equilibrium(self):
        """Generators deliver their setpoints and the load absorbs their sum."""
        shape = NetworkShape(X=1.2, k=0.3, V1=1.02, V2=0.99)
        dispatch = Dispatch(Pref1=0.35, Pref2=0.45)
        op = solve_operating_point(shape, dispatch)
        net = shape.with_load(op.R_LD)
        pe1, pe2 = electrical_power(reduced_coefficients(net), net, op.delta12)
        self.assertAlmostEqual(pe1, 0.35, places=10)
        self.assertAlmostEqual(pe2, 0.45, places=10)
        self.assertAlmostEqual(pe1 + pe2, op.V3**2 / op.R_LD, places=10)
        self.assertAlmostEqual(op.delta13 - op.delta23, op.delta12, places=12)

    def test_infeasible_dispatch(self):
        """A dispatch far beyond the transfer capability is reported with diagnostics."""
        with self.assertRaises(InfeasibleOperatingPointError) as context:
            solve_operating_point(NetworkShape(X=4.0, k=0.5), Dispatch(Pref1=5.0, Pref2=0.0))
        self.assertGreaterEqual(context.exception.iterations, 1)

    def test_linearization_signs(self):
        """At the symmetric point Klin1 = -Klin2 > 0 and d1 = d2."""
        op = solve_operating_point(self.shape, self.dispatch)
        lin = linearize(self.shape.with_load(op.R_LD), op)
        self.assertGreater(lin.Klin1, 0.0)
        self.assertAlmostEqual(lin.Klin1, -lin.Klin2, places=12)
        self.assertAlmostEqual(lin.d1, lin.d2, places=12)

    def test_single_machine_point(self):
        """The high-resistance branch of the single-machine quadratic is selected."""
        point = solve_single_operating_point(1.0, 0.25, 0.5)
        self.assertAlmostEqual(point.R_LD, 1.0 + math.sqrt(0.9375), places=12)
        self.assertAlmostEqual(point.Pe, 0.5, places=12)
        self.assertGreater(point.R_LD, 0.25)
        self.assertLess(point.load_angle, 0.0)

    def test_single_machine_sensitivity(self):
        """The analytic derivative matches a central difference."""
        point = solve_single_operating_point(1.0, 0.25, 0.5)
        h = 1e-6

        def power(R):
            return R / (R**2 + 0.25**2)

        numeric = (power(point.R_LD + h) - power(point.R_LD - h)) / (2 * h)
        self.assertAlmostEqual(single_load_sensitivity(1.0, 0.25, point.R_LD), numeric, places=8)

    def test_single_machine_infeasible(self):
        """Dispatch beyond V^2/(2X) has no equilibrium."""
        with self.assertRaises(InfeasibleOperatingPointError):
            solve_single_operating_point(1.0, 0.25, 3.0)


if __name__ == "__main__":
    unittest.main()
