"""Sequential monitoring procedures to detect unit roots and stationarity.

Thin python surface over the C++ core: detection statistics, truncated
stopping rules, limit-law simulation and calibration, and the synthetic
models used by the experiment harness.
"""

from ._core import (
    DegenerateDenominator,
    MissingCalibrationError,
    SeqmonError,
    __version__,
    apply_residual_mode,
    calibrate,
    eval_functional,
    generate,
    kernel_value,
    newey_west,
    read_series,
    resolve_lag,
    run_monitor,
    run_size_power,
    scaled_weight,
    simulate_bm,
    simulate_ou,
    to_bridge_mu,
    to_detrended,
    u_stat,
    u_tilde_stat,
    write_series,
)

__all__ = [
    "DegenerateDenominator",
    "MissingCalibrationError",
    "SeqmonError",
    "__version__",
    "apply_residual_mode",
    "calibrate",
    "eval_functional",
    "generate",
    "kernel_value",
    "newey_west",
    "read_series",
    "resolve_lag",
    "run_monitor",
    "run_size_power",
    "scaled_weight",
    "simulate_bm",
    "simulate_ou",
    "to_bridge_mu",
    "to_detrended",
    "u_stat",
    "u_tilde_stat",
    "write_series",
]
