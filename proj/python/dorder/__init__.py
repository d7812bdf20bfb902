"""Spectral solver for the distributed-order equation integral_0^beta D^alpha y d alpha = 0."""

from ._dorder import (
    DEFAULT_BETA,
    ConstantPhi,
    CosinePhi,
    Error,
    ModePhi,
    SampledPhi,
    SpectralSeries,
    char_fn,
    classical_reciprocal_gamma,
    correction_term,
    eval_h,
    lattice_root,
    manufacture_boundary_phi,
    manufacture_cauchy_phi,
    manufactured_coefficients,
    mode_fn,
    reciprocal_factorial,
    roots,
    solve_bvp,
    solve_cauchy,
    termwise_deriv,
    verify,
)

__all__ = [
    "DEFAULT_BETA",
    "ConstantPhi",
    "CosinePhi",
    "Error",
    "ModePhi",
    "SampledPhi",
    "SpectralSeries",
    "char_fn",
    "classical_reciprocal_gamma",
    "correction_term",
    "eval_h",
    "lattice_root",
    "manufacture_boundary_phi",
    "manufacture_cauchy_phi",
    "manufactured_coefficients",
    "mode_fn",
    "reciprocal_factorial",
    "roots",
    "solve_bvp",
    "solve_cauchy",
    "termwise_deriv",
    "verify",
]
