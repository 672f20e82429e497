"""Coverage of the unit cube by Poisson rays and Brownian cylinders."""

from ._core import (
    BrownianModelSample,
    ConfigError,
    DegenerateHeight,
    Error,
    InvalidDistance,
    InvalidIntensity,
    InvalidSteps,
    IOFailure,
    LineModelSample,
    UnsupportedCombination,
    ZeroVerticalComponent,
    c_star,
    condition_probability,
    cover_count,
    coverage_radius,
    crossing_constant,
    crossing_probability,
    expected_cover_count,
    expected_uncovered_volume,
    min_distance,
    phi,
    radius_at_intensity,
    run_sweep,
    sample_brownian_model,
    sample_line_model,
    theory_report,
    uncovered_volume_estimate,
    unit_ball_volume,
)

__version__ = "0.1.0"
