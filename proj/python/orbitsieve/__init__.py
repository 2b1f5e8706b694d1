"""Orbit enumeration, exact local densities, and weighted-sieve saturation bounds."""

from ._core import (
    OrbitSieveError,
    almost_prime_count,
    beta_for_kappa,
    build_sequence,
    delta_threshold_for_R,
    estimate_delta,
    evaluate_form,
    exponent_of_distribution,
    is_isometry,
    local_density,
    m_zeta,
    optimize_R,
    orbit_ball,
    preset_names,
    prime_divisor_count,
    saturation_table,
    solve_tables,
)

__all__ = [
    "OrbitSieveError",
    "almost_prime_count",
    "beta_for_kappa",
    "build_sequence",
    "delta_threshold_for_R",
    "estimate_delta",
    "evaluate_form",
    "exponent_of_distribution",
    "is_isometry",
    "local_density",
    "m_zeta",
    "optimize_R",
    "orbit_ball",
    "preset_names",
    "prime_divisor_count",
    "saturation_table",
    "solve_tables",
]
