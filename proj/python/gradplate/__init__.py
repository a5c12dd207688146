"""Midsurface theory toolkit for thin gradient-elastic plates.

Thin wrapper over the compiled extension; everything lives in ``_core``.
"""

from ._core import (
    ChainSpec,
    ConvergenceReport,
    CrackConfig,
    CrackProfile,
    DerivedCoeffs,
    DispersionSample,
    EllipticityClass,
    EllipticityReport,
    FieldSample,
    MaterialSpec,
    MotionFamily,
    ShearCoeffs,
    WaveSimulation,
    __version__,
    acoustic_contraction_flat,
    classical_limit,
    classical_reference,
    classify_ellipticity_flat,
    continuum_dispersion,
    convergence_study,
    crack_basis_hilbert,
    derive_coefficients,
    discrete_dispersion,
    dispersion_point,
    dispersion_sweep,
    finite_hilbert,
    identify_lengths,
    load_material,
    longitudinal_crossing_k2,
    measure_phase_velocity,
    normal_crossing_k2,
    parse_material_text,
    reconstruct_field,
    shear_coeffs,
    solve_crack,
    tip_diagnostics,
)

__all__ = [
    "ChainSpec",
    "ConvergenceReport",
    "CrackConfig",
    "CrackProfile",
    "DerivedCoeffs",
    "DispersionSample",
    "EllipticityClass",
    "EllipticityReport",
    "FieldSample",
    "MaterialSpec",
    "MotionFamily",
    "ShearCoeffs",
    "WaveSimulation",
    "__version__",
    "acoustic_contraction_flat",
    "classical_limit",
    "classical_reference",
    "classify_ellipticity_flat",
    "continuum_dispersion",
    "convergence_study",
    "crack_basis_hilbert",
    "derive_coefficients",
    "discrete_dispersion",
    "dispersion_point",
    "dispersion_sweep",
    "finite_hilbert",
    "identify_lengths",
    "load_material",
    "longitudinal_crossing_k2",
    "measure_phase_velocity",
    "normal_crossing_k2",
    "parse_material_text",
    "reconstruct_field",
    "shear_coeffs",
    "solve_crack",
    "tip_diagnostics",
]
