"""Chevalley-Eilenberg cohomology and perturbative anomalies of commuting Hermitian pairs."""

from cecoh._core import (
    InputError,
    NumericalError,
    NotExactError,
    SpectrumError,
    anomaly_report_json,
    cohomology,
    commutant,
    continue_series,
    joint_spectrum,
    obstruction,
    solve_first_order,
    verma_check_json,
)

__all__ = [
    "InputError",
    "NumericalError",
    "NotExactError",
    "SpectrumError",
    "anomaly_report_json",
    "cohomology",
    "commutant",
    "continue_series",
    "joint_spectrum",
    "obstruction",
    "solve_first_order",
    "verma_check_json",
]
