"""
Tests for the linear time-domain simulation and the RoCoF study.
"""

import math
import unittest

import numpy as np

from gridmodal.engine.sim import (
    build_aggregate_model,
    discretize,
    final_value,
    governor_mode_demo,
    instantaneous_rocof,
    propagate,
    rocof_study,
    step_response,
)
from gridmodal.engine.statespace import assemble_scenario
from gridmodal.errors import AssemblyError, ChannelError
from gridmodal.models import AggregateSystem, SecondaryRegulation, StateSpaceModel
from gridmodal.scenarios import ScenarioLoader


def _first_order(pole=-2.0):
    return StateSpaceModel(
        A=np.array([[pole]]),
        B=np.array([[1.0]]),
        C=np.array([[1.0]]),
        D=np.array([[0.0]]),
        state_labels=("x",),
        input_labels=("u",),
        output_labels=("x",),
    )


class TestPropagation(unittest.TestCase):
    """
    Test exact zero-order-hold propagation.
    """

    def test_discretize_scalar(self):
        """A scalar pole discretizes to exp(a dt) and (exp(a dt) - 1)/a."""
        Ad, Bd = discretize(np.array([[-2.0]]), np.array([[1.0]]), 0.1)
        self.assertAlmostEqual(Ad[0, 0], math.exp(-0.2), places=14)
        self.assertAlmostEqual(Bd[0, 0], (1.0 - math.exp(-0.2)) / 2.0, places=14)

    def test_step_matches_analytic_response(self):
        """Samples of a first-order step response are exact."""
        series = step_response(_first_order(), "u", 3.0, t_end=2.0, dt=0.05)
        expected = 1.5 * (1.0 - np.exp(-2.0 * series.t))
        np.testing.assert_allclose(series["x"], expected, atol=1e-12)
        self.assertEqual(len(series.t), 41)

    def test_halving_the_step_keeps_the_samples(self):
        """Common sample instants agree when dt is halved."""
        model = assemble_scenario(ScenarioLoader().load("case1a")).model
        coarse = step_response(model, "R_LD", -0.01, t_end=5.0, dt=0.02)
        fine = step_response(model, "R_LD", -0.01, t_end=5.0, dt=0.01)
        np.testing.assert_allclose(fine["omega1"][::2], coarse["omega1"], rtol=1e-8, atol=1e-12)

    def test_horizon_checks(self):
        """dt larger than t_end/10 is rejected."""
        with self.assertRaises(ValueError):
            propagate(_first_order(), np.array([1.0]), t_end=1.0, dt=0.2)
        with self.assertRaises(ValueError):
            propagate(_first_order(), np.array([1.0]), t_end=0.0, dt=0.01)

    def test_unknown_channel(self):
        """A step on a missing input raises a channel error."""
        with self.assertRaises(ChannelError):
            step_response(_first_order(), "Pref1", 1.0, t_end=1.0, dt=0.01)

    def test_final_value_matches_long_simulation(self):
        """The response settles on -C A^-1 B u + D u."""
        model = assemble_scenario(
            ScenarioLoader().load("case1a"), outputs=("omega1", "omega2", "Pe1", "Pe2")
        ).model
        steady = final_value(model, "R_LD", -0.01)
        series = step_response(model, "R_LD", -0.01, t_end=250.0, dt=0.05)
        for label, value in steady.items():
            self.assertAlmostEqual(series[label][-1], value, delta=1e-8)
        # a heavier load slows both machines by the same amount
        self.assertLess(steady["omega1"], 0.0)
        self.assertAlmostEqual(steady["omega1"], steady["omega2"], delta=1e-12)


class TestGovernorMode(unittest.TestCase):
    """
    Test the differential governor-mode demonstration.
    """

    def setUp(self):
        """Set up the test case."""
        self.scenario = ScenarioLoader().load("govmode")

    def test_settling_of_mismatched_governors(self):
        """Governors of 0.5 s and 1.5 s settle their differential mode in about 3 s."""
        result = governor_mode_demo(self.scenario, Tg1=0.5, Tg2=1.5)
        self.assertGreater(result.eigenvalue, -1.2)
        self.assertLess(result.eigenvalue, -0.9)
        self.assertAlmostEqual(result.weighted_time_constant, 1.0)
        self.assertGreater(result.settling_time, 2.55)
        self.assertLess(result.settling_time, 3.45)
        rate = -result.eigenvalue
        self.assertAlmostEqual(result.decay_rate, rate, delta=0.1 * rate)

    def test_series_channels(self):
        """The result carries both governor outputs and their difference."""
        result = governor_mode_demo(self.scenario, Tg1=0.5, Tg2=1.5, t_end=5.0, dt=0.01)
        series = result.series
        self.assertEqual(series.names, ["Pm1", "Pm2", "Pm_diff", "governor_component"])
        np.testing.assert_allclose(series["Pm_diff"], series["Pm1"] - series["Pm2"])
        self.assertEqual(series["governor_component"][0], 0.0)

    def test_equal_governors_leave_no_difference(self):
        """Identical governors keep both mechanical powers equal throughout."""
        result = governor_mode_demo(self.scenario, Tg1=1.0, Tg2=1.0, t_end=5.0, dt=0.01)
        self.assertLess(np.max(np.abs(result.series["Pm_diff"])), 1e-12)

    def test_needs_two_generators(self):
        """A GFM machine cannot take part in the demonstration."""
        with self.assertRaises(AssemblyError):
            governor_mode_demo(ScenarioLoader().load("case1b"))


class TestRocof(unittest.TestCase):
    """
    Test RoCoF and nadir after a 25 % generation loss.
    """

    def setUp(self):
        """Set up the test case."""
        loader = ScenarioLoader()
        self.low_inertia = loader.load("rocof-lowH").rocof
        self.conventional = loader.load("rocof-conventional").rocof

    def run_study(self, spec, aggregate=None):
        metrics, _ = rocof_study(
            aggregate or spec.aggregate, spec.dP, spec.windows, spec.t_end, spec.dt
        )
        return metrics

    def test_low_inertia_case(self):
        """A stiff natural droop settles the frequency within a few tens of milliseconds."""
        metrics = self.run_study(self.low_inertia)
        self.assertAlmostEqual(metrics.rocof[0.05], 4.6, delta=4.6 * 0.03)
        self.assertAlmostEqual(metrics.rocof[0.5], 0.5, delta=0.5 * 0.03)
        self.assertAlmostEqual(metrics.nadir, -0.25, delta=0.25 * 0.02)

    def test_conventional_case(self):
        """Primary regulation arrests the frequency about one second after the event."""
        metrics = self.run_study(self.conventional)
        self.assertAlmostEqual(metrics.rocof[0.05], 1.56, delta=1.56 * 0.03)
        self.assertAlmostEqual(metrics.rocof[0.5], 1.32, delta=1.32 * 0.1)
        self.assertAlmostEqual(metrics.nadir, -0.88, delta=0.88 * 0.1)
        self.assertGreater(metrics.t_nadir, 0.8)
        self.assertLess(metrics.t_nadir, 1.3)

    def test_nadir_insensitive_to_secondary_gain(self):
        """The slow secondary loop barely moves the conventional nadir."""
        reference = self.run_study(self.conventional).nadir
        for Ki in (0.05, 0.15):
            aggregate = self.conventional.aggregate.model_copy(
                update={"secondary": SecondaryRegulation(Ki=Ki)}
            )
            nadir = self.run_study(self.conventional, aggregate).nadir
            self.assertAlmostEqual(nadir, reference, delta=abs(reference) * 0.02)

    def test_rocof_does_not_grow_with_the_window(self):
        """Averaging over a longer window never gives a steeper RoCoF."""
        windows = [0.02, 0.05, 0.1, 0.2, 0.5, 1.0]
        for spec in (self.low_inertia, self.conventional):
            metrics, _ = rocof_study(spec.aggregate, spec.dP, windows, spec.t_end, spec.dt)
            values = np.array([metrics.rocof[window] for window in windows])
            self.assertTrue(np.all(np.diff(values) <= 1e-12), values)

    def test_instantaneous_rocof(self):
        """The initial slope is dP f0 / 2H."""
        self.assertAlmostEqual(instantaneous_rocof(4.0, 0.25), 1.5625)
        with self.assertRaises(ValueError):
            instantaneous_rocof(0.0, 0.25)

    def test_aggregate_layout(self):
        """Regulation blocks add their own states."""
        model = build_aggregate_model(self.conventional.aggregate)
        self.assertEqual(model.state_labels, ("f", "Pm", "xs"))
        bare = build_aggregate_model(AggregateSystem(H=4.0, R_natural=100.0))
        self.assertEqual(bare.state_labels, ("f",))
        self.assertAlmostEqual(bare.A[0, 0], -0.01 / 8.0)

    def test_invalid_study(self):
        """Non-positive losses and windows beyond the horizon are rejected."""
        aggregate = self.low_inertia.aggregate
        with self.assertRaises(ValueError):
            rocof_study(aggregate, 0.0, [0.05], 10.0)
        with self.assertRaises(ValueError):
            rocof_study(aggregate, 0.25, [12.0], 10.0)


if __name__ == "__main__":
    unittest.main()
