"""Truncated Gaussian white noise on the torus.

Sampling of spectral white-noise fields, Besov / Fourier-Besov norms from
Littlewood-Paley blocks, Orlicz (Luxemburg) norms, and the Monte Carlo
experiment runners, all backed by the C++ core.
"""

from noiselab._core import (
    ConfigError,
    DivergenceError,
    PreconditionError,
    QuadratureError,
    ResourceError,
    SpectralField,
    ball_volume,
    besov_norm,
    enumerate_ball_count,
    fb_norms,
    field_from_json,
    gamma_moment,
    hv_upper_bound,
    log_sup_statistic,
    luxemburg_rho,
    phi,
    phi_j,
    phi_sq_sum,
    run_experiment,
    sample_white_noise,
    shell_count,
    shell_count_limit,
    sobolev_h2_norm,
    theta,
    w_stat,
    __version__,
)

__all__ = [
    "ConfigError",
    "DivergenceError",
    "PreconditionError",
    "QuadratureError",
    "ResourceError",
    "SpectralField",
    "ball_volume",
    "besov_norm",
    "enumerate_ball_count",
    "fb_norms",
    "field_from_json",
    "gamma_moment",
    "hv_upper_bound",
    "log_sup_statistic",
    "luxemburg_rho",
    "phi",
    "phi_j",
    "phi_sq_sum",
    "run_experiment",
    "sample_white_noise",
    "shell_count",
    "shell_count_limit",
    "sobolev_h2_norm",
    "theta",
    "w_stat",
    "__version__",
]
