"""
Readers for the CSV files written by the CSV exporter.

Each reader rebuilds the value structure a file was written from, at the
six-significant-digit precision of the file.
"""

import logging
import re

import numpy as np
import pandas as pd

from gridmodal.models import Mode, ModeLabel, ModeSet, RocofMetrics, TimeSeries

logger = logging.getLogger("gridmodal.exporters.readers")

_ROCOF_KEY = re.compile(r"^rocof_(\d+)ms$")
_PARTICIPATION_PREFIX = "participation_"


def read_modes(path: str) -> ModeSet:
    """
    Read ``<name>.modes.csv`` back into a mode set (mode shapes are not stored).

    The eigenvalue is rebuilt from the real and imaginary columns, so the empty
    frequency and damping cells of real modes are not needed.
    """
    df = pd.read_csv(path, dtype={"label": str, "freq_hz": float, "zeta": float})
    states = tuple(
        column[len(_PARTICIPATION_PREFIX):]
        for column in df.columns
        if column.startswith(_PARTICIPATION_PREFIX)
    )
    modes = []
    for _, row in df.iterrows():
        modes.append(
            Mode(
                eigenvalue=complex(float(row["real"]), float(row["imag"])),
                shape={},
                participation={
                    state: float(row[f"{_PARTICIPATION_PREFIX}{state}"]) for state in states
                },
                label=ModeLabel(row["label"]),
            )
        )
    logger.debug(f"Read {len(modes)} modes from {path}")
    return ModeSet(modes=tuple(modes), state_labels=states)


def read_sweep(path: str) -> pd.DataFrame:
    """
    Read ``<name>.sweep.csv``, one row per mode per grid point.

    Real modes have no frequency or damping ratio and read back as NaN.
    """
    df = pd.read_csv(
        path, dtype={"parameter": str, "label": str, "freq_hz": float, "zeta": float}
    )
    df["eigenvalue"] = df["real"] + 1j * df["imag"]
    return df


def read_series(path: str) -> TimeSeries:
    """Read a trajectory file (``.sim.csv``, ``.rocof_trajectory.csv``, ``.govmode.csv``)."""
    df = pd.read_csv(path)
    channels = {
        column: df[column].to_numpy(dtype=float) for column in df.columns if column != "t"
    }
    units = {column: "Hz" if column.endswith("_hz") else "pu" for column in channels}
    return TimeSeries(t=df["t"].to_numpy(dtype=float), channels=channels, units=units)


def read_rocof(path: str) -> RocofMetrics:
    """Read ``<name>.rocof.csv`` back into RoCoF metrics."""
    df = pd.read_csv(path, dtype={"metric": str})
    values = dict(zip(df["metric"], df["value"].astype(float)))
    rocof = {}
    for key, value in values.items():
        match = _ROCOF_KEY.match(key)
        if match:
            rocof[int(match.group(1)) / 1000.0] = float(value)
    return RocofMetrics(
        rocof=rocof,
        nadir=float(values.get("nadir", np.nan)),
        t_nadir=float(values.get("t_nadir", np.nan)),
    )
