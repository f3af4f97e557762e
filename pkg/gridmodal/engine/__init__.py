"""
Engine module for GridModal.

This module contains the computational core: network reduction, equilibrium,
state-space assembly, modal analysis, sweeps and time-domain simulation.
"""

from gridmodal.engine.modal import EigenDecomposition, analyze, classify, eigen
from gridmodal.engine.netred import (
    build_admittance,
    electrical_power,
    kron_reduce,
    load_voltage,
    reduced_coefficients,
)
from gridmodal.engine.operating import (
    linearize,
    solve_operating_point,
    solve_single_operating_point,
)
from gridmodal.engine.sim import governor_mode_demo, rocof_study, step_response
from gridmodal.engine.statespace import (
    AssembledCase,
    assemble_scenario,
    build_single_gcsg,
    build_single_gfm,
    build_two_machine,
)
from gridmodal.engine.study import Study
from gridmodal.engine.sweep import sweep

__all__ = [
    "AssembledCase",
    "EigenDecomposition",
    "Study",
    "analyze",
    "assemble_scenario",
    "build_admittance",
    "build_single_gcsg",
    "build_single_gfm",
    "build_two_machine",
    "classify",
    "eigen",
    "electrical_power",
    "governor_mode_demo",
    "kron_reduce",
    "linearize",
    "load_voltage",
    "reduced_coefficients",
    "rocof_study",
    "solve_operating_point",
    "solve_single_operating_point",
    "step_response",
    "sweep",
]
