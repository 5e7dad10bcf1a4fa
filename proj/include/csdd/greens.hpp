#pragma once

// Fields of a climb dislocation (Burgers vector b along y) and a constrained
// wedge disclination (Frank angle Omega) at the origin of a couple-stress
// plane. The cut lies on y = 0; displacement and rotation jump across x = 0
// as unit steps.
//
// Gauge: the rigid translation b/4 and rotation -Omega/4 make uy and omega
// vanish on y = 0+ for x > 0 (the disclination keeps its rigid rotation
// term -Omega x/4 in uy).
//
// Only y >= 0 is evaluated. Mirror symmetry gives the lower half plane:
// ux, sxx, syy, myz are even in y; uy, omega, sxy, syx, mxz are odd.

namespace csdd::greens {

struct MaterialParams {
    double shear_modulus = 1.0;   // mu
    double poisson_ratio = 0.3;   // nu
    double char_length = 1.0;     // l

    // Throws std::domain_error when mu <= 0, nu outside (-1, 0.5] or l < 0.
    void validate() const;
    double lame_lambda() const;
    double youngs_modulus() const;
};

struct DefectCharge {
    double burgers = 0.0;  // climb component b
    double frank = 0.0;    // wedge angle Omega
};

struct FieldState {
    double sxx = 0, syy = 0, sxy = 0, syx = 0;
    double mxz = 0, myz = 0;
    double ux = 0, uy = 0;
    double omega = 0;
};

// Normal stress and couple stress on y = 0. x != 0, l > 0.
double line_sigma_yy(double x, const DefectCharge& charge, const MaterialParams& mat);
double line_m_yz(double x, const DefectCharge& charge, const MaterialParams& mat);

// Full field at (x, y), y >= 0, (x, y) != (0, 0), l > 0.
FieldState full_field(double x, double y, const DefectCharge& charge, const MaterialParams& mat);

enum class SemiInfinite { I10, I11 };

// I10 = int_0^inf (1/xi) exp(-y a(xi)/l) sin(xi x) dxi
// I11 = int_0^inf (a(xi)/xi) exp(-y a(xi)/l) sin(xi x) dxi
// with a(xi) = sqrt(1 + l^2 xi^2). Requires y > 0, l > 0.
double semi_infinite_integral(SemiInfinite which, double x, double y, double ell);

}  // namespace csdd::greens
