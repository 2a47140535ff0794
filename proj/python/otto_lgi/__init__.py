"""Leggett-Garg quantumness of a finite-time qubit Otto engine."""

from ._core import (
    EngineParams,
    OttoError,
    classify_cell,
    correlation_numeric,
    correlation_xx,
    damping_rate,
    delta_p_eq,
    entropy_production,
    equilibrium_polarization,
    feasible,
    k3,
    optimal_times,
    quantum_time,
    relax_polarization,
    solve_cycle,
    sweep,
    thermal_occupation,
    threshold_temperature,
    total_work,
)

__all__ = [
    "EngineParams",
    "OttoError",
    "classify_cell",
    "correlation_numeric",
    "correlation_xx",
    "damping_rate",
    "delta_p_eq",
    "entropy_production",
    "equilibrium_polarization",
    "feasible",
    "k3",
    "optimal_times",
    "quantum_time",
    "relax_polarization",
    "solve_cycle",
    "sweep",
    "thermal_occupation",
    "threshold_temperature",
    "total_work",
]
