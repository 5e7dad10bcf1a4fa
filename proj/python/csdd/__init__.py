"""Mode I crack in couple-stress elasticity, solved with distributed
climb dislocations and constrained wedge disclinations."""

from ._core import (
    ClassicalBaseline,
    CrackProblem,
    CrackProfiles,
    DefectCharge,
    DensitySolution,
    Discretization,
    FieldState,
    MaterialParams,
    SolverError,
    TipQuantities,
    bessel_k,
    bessel_k_scaled,
    classical_baseline,
    crack_profiles,
    endpoint_values,
    full_field,
    j_integral,
    k0_log_reg,
    k2_reg,
    k3_reg,
    kernel_k1,
    kernel_k2,
    kernel_k3,
    line_m_yz,
    line_sigma_yy,
    log_quadrature_weight,
    meijer_kernel,
    semi_infinite_integral,
    solve,
    stress_ahead,
    stress_intensity_factor,
    tip_quantities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
