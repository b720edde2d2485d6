"""Learning-augmented online fractional knapsack."""

from ._okp import (
    ConfigError,
    DataError,
    InfeasibilityError,
    Instance,
    Prediction,
    Solution,
    critical_value,
    empirical_cr,
    fractional_opt,
    generate,
    integral_opt,
    make_prediction,
    read_instance_csv,
    run,
    run_sweep,
    ta_threshold,
    write_instance_csv,
)

__all__ = [
    "ConfigError",
    "DataError",
    "InfeasibilityError",
    "Instance",
    "Prediction",
    "Solution",
    "critical_value",
    "empirical_cr",
    "fractional_opt",
    "generate",
    "integral_opt",
    "make_prediction",
    "read_instance_csv",
    "run",
    "run_sweep",
    "ta_threshold",
    "write_instance_csv",
]
