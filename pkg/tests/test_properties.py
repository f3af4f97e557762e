"""
Randomized property checks over many parameter draws.

Every suite draws from a seeded generator, so failures are reproducible.
Draws whose dispatch has no equilibrium are skipped.
"""

import math
import unittest

import numpy as np

from gridmodal.engine.modal import eigen
from gridmodal.engine.netred import (
    build_admittance,
    bus_voltages,
    electrical_power,
    kron_reduce,
    reduced_coefficients,
)
from gridmodal.engine.operating import linearize, solve_operating_point
from gridmodal.engine.sim import step_response
from gridmodal.engine.statespace import assemble_scenario
from gridmodal.errors import InfeasibleOperatingPointError
from gridmodal.models import BaseSystem, Dispatch, NetworkParams, NetworkShape, Scenario

TRIALS = 1000
MIN_SOLVED = 500


def _network(rng):
    return NetworkParams(
        X=rng.uniform(0.2, 1.2),
        k=rng.uniform(0.1, 0.9),
        V1=rng.uniform(0.95, 1.05),
        V2=rng.uniform(0.95, 1.05),
        R_LD=rng.uniform(0.3, 5.0),
    )


def _machine(rng, kind=None):
    kind = kind or ("gfm" if rng.uniform() < 0.3 else "gcsg")
    if kind == "gfm":
        return {"kind": "gfm", "S": 0.5, "H": rng.uniform(0.5, 8.0), "D": rng.uniform(5.0, 50.0)}
    return {
        "kind": "gcsg",
        "S": 0.5,
        "H": rng.uniform(0.5, 8.0),
        "D": rng.uniform(0.0, 1.0),
        "R": rng.uniform(0.02, 0.1),
        "tau": rng.uniform(0.1, 2.0),
    }


def _scenario(rng, **overrides):
    values = {
        "name": "random",
        "network": {"SCR": rng.uniform(2.0, 10.0), "k": rng.uniform(0.2, 0.8)},
        "dispatch": {"Pref1": rng.uniform(0.1, 0.5), "Pref2": rng.uniform(0.1, 0.5)},
        "machines": [_machine(rng), _machine(rng)],
    }
    values.update(overrides)
    return Scenario(**values)


def _nearest_distance(values, targets):
    return max(float(np.min(np.abs(targets - value))) for value in values)


class TestNetworkProperties(unittest.TestCase):
    """
    Properties of the reduced network.
    """

    def test_kron_matches_closed_form(self):
        """The closed-form coefficients equal the numerical Kron reduction."""
        rng = np.random.default_rng(101)
        for _ in range(TRIALS):
            net = _network(rng)
            reduced = kron_reduce(build_admittance(net))
            np.testing.assert_allclose(
                reduced_coefficients(net).matrix(), reduced, rtol=1e-12, atol=1e-12
            )

    def test_power_balance(self):
        """Generated power equals the load consumption of the full nodal solve."""
        rng = np.random.default_rng(102)
        for _ in range(TRIALS):
            net = _network(rng)
            delta = rng.uniform(-1.0, 1.0)
            pe1, pe2 = electrical_power(reduced_coefficients(net), net, delta)
            consumed = abs(bus_voltages(net, delta)[2]) ** 2 / net.R_LD
            self.assertAlmostEqual(pe1 + pe2, consumed, delta=1e-10 * max(1.0, consumed))


class TestOperatingPointProperties(unittest.TestCase):
    """
    Properties of the equilibrium and its linearization.
    """

    def test_coefficients_match_finite_differences(self):
        """Analytic Klin and d agree with central differences of the powers."""
        rng = np.random.default_rng(201)
        solved = 0
        h = 1e-6
        for _ in range(TRIALS):
            shape = NetworkShape(
                X=rng.uniform(0.2, 1.2),
                k=rng.uniform(0.1, 0.9),
                V1=rng.uniform(0.95, 1.05),
                V2=rng.uniform(0.95, 1.05),
            )
            dispatch = Dispatch(Pref1=rng.uniform(0.1, 0.5), Pref2=rng.uniform(0.1, 0.5))
            try:
                op = solve_operating_point(shape, dispatch)
            except InfeasibleOperatingPointError:
                continue
            solved += 1
            net = shape.with_load(op.R_LD)
            lin = linearize(net, op)
            red = reduced_coefficients(net)

            plus = electrical_power(red, net, op.delta12 + h)
            minus = electrical_power(red, net, op.delta12 - h)
            up, down = shape.with_load(op.R_LD + h), shape.with_load(op.R_LD - h)
            raised = electrical_power(reduced_coefficients(up), up, op.delta12)
            lowered = electrical_power(reduced_coefficients(down), down, op.delta12)

            pairs = (
                (lin.Klin1, (plus[0] - minus[0]) / (2 * h)),
                (lin.Klin2, (plus[1] - minus[1]) / (2 * h)),
                (lin.d1, (raised[0] - lowered[0]) / (2 * h)),
                (lin.d2, (raised[1] - lowered[1]) / (2 * h)),
            )
            for analytic, numeric in pairs:
                self.assertLessEqual(
                    abs(analytic - numeric), 1e-6 * max(abs(analytic), 1e-2)
                )
            self.assertAlmostEqual(op.Pe1, dispatch.Pref1, delta=1e-10)
            self.assertAlmostEqual(op.Pe2, dispatch.Pref2, delta=1e-10)
            self.assertLess(abs(op.delta12), math.pi / 2)
        self.assertGreaterEqual(solved, MIN_SOLVED)


class TestModelProperties(unittest.TestCase):
    """
    Properties of assembled models, their spectra and their responses.
    """

    def test_eigen_residual_bound(self):
        """Every eigenpair of a random model meets the residual bound."""
        rng = np.random.default_rng(301)
        solved = 0
        for _ in range(TRIALS):
            try:
                model = assemble_scenario(_scenario(rng)).model
            except InfeasibleOperatingPointError:
                continue
            solved += 1
            result = eigen(model.A)
            self.assertEqual(len(result.values), model.n_states)
            self.assertLessEqual(result.residual, 1e-9 * np.linalg.norm(model.A, np.inf))
        self.assertGreaterEqual(solved, MIN_SOLVED)

    def test_symmetric_system_keeps_speeds_together(self):
        """A load step on a symmetric system never excites the differential mode."""
        rng = np.random.default_rng(302)
        for _ in range(TRIALS):
            machine = _machine(rng, kind="gcsg")
            Pref = rng.uniform(0.1, 0.4)
            scenario = _scenario(
                rng,
                network={"SCR": rng.uniform(4.0, 10.0), "k": 0.5},
                dispatch={"Pref1": Pref, "Pref2": Pref},
                machines=[machine, dict(machine)],
            )
            model = assemble_scenario(scenario, outputs=("omega1", "omega2")).model
            series = step_response(model, "R_LD", -0.01, t_end=2.0, dt=0.02)
            peak = max(float(np.max(np.abs(series["omega1"]))), 1e-12)
            np.testing.assert_allclose(series["omega1"], series["omega2"], atol=1e-9 * peak)

    def test_eigenvalues_do_not_depend_on_the_base(self):
        """Rescaling the power and voltage base leaves the spectrum unchanged."""
        rng = np.random.default_rng(303)
        solved = 0
        for _ in range(TRIALS):
            scenario = _scenario(rng)
            rescaled = scenario.model_copy(
                update={
                    "base": BaseSystem(
                        Sbase=10.0 ** rng.uniform(3.0, 7.0), Vbase=rng.uniform(230.0, 33000.0)
                    )
                }
            )
            try:
                pu = eigen(assemble_scenario(scenario).model.A).values
            except InfeasibleOperatingPointError:
                continue
            solved += 1
            si = eigen(assemble_scenario(rescaled).model.A).values
            scale = max(1.0, float(np.max(np.abs(pu))))
            self.assertLessEqual(_nearest_distance(si, pu), 1e-8 * scale)
            self.assertLessEqual(_nearest_distance(pu, si), 1e-8 * scale)
        self.assertGreaterEqual(solved, MIN_SOLVED)

    def test_halving_the_step_keeps_common_samples(self):
        """Exact propagation gives the same samples for dt and dt/2."""
        rng = np.random.default_rng(304)
        solved = 0
        for _ in range(TRIALS):
            try:
                model = assemble_scenario(_scenario(rng)).model
            except InfeasibleOperatingPointError:
                continue
            solved += 1
            dt = rng.uniform(0.005, 0.05)
            coarse = step_response(model, "R_LD", -0.01, t_end=20 * dt, dt=dt)
            fine = step_response(model, "R_LD", -0.01, t_end=20 * dt, dt=dt / 2)
            for channel in coarse.names:
                scale = max(float(np.max(np.abs(coarse[channel]))), 1e-12)
                np.testing.assert_allclose(
                    fine[channel][::2], coarse[channel], atol=1e-8 * scale, rtol=0.0
                )
        self.assertGreaterEqual(solved, MIN_SOLVED)


if __name__ == "__main__":
    unittest.main()
