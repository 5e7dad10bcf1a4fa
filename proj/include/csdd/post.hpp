#pragma once

// Observables derived from solved densities: crack-face opening and
// rotation jumps, stresses ahead of the tips, stress intensity factor and
// the J-integral, plus the classical (l = 0) baseline.

#include "csdd/sie.hpp"

#include <vector>

namespace csdd::post {

using sie::CrackProblem;
using sie::DensitySolution;

// Chebyshev expansion sum c_j T_j(s) of data given at the zeros of T_n.
struct ChebyshevSeries {
    std::vector<double> coeffs;

    double operator()(double s) const;
};

ChebyshevSeries chebyshev_series(const std::vector<double>& nodal_values);

struct CrackProfiles {
    std::vector<double> x_samples;    // physical x in (-a, a)
    std::vector<double> delta_uy;     // opening, length
    std::vector<double> delta_omega;  // rotation jump, dimensionless
};

// m_samples equally spaced interior points.
CrackProfiles crack_profiles(const DensitySolution& sol, int m_samples);

// Opening and rotation jump at a single |x| <= a.
double opening_at(const DensitySolution& sol, double x);
double rotation_jump_at(const DensitySolution& sol, double x);

struct EndpointValues {
    double f_plus = 0, g_plus = 0;    // at s = +1
    double f_minus = 0, g_minus = 0;  // at s = -1
};

EndpointValues endpoint_values(const DensitySolution& sol);

struct NearTipStress {
    double sigma_yy = 0;  // force/length^2
    double m_yz = 0;      // force/length
};

// Crack-line stresses at |x| > a.
NearTipStress stress_ahead(const DensitySolution& sol, double x);
// Same at x = a + xbar, xbar > 0, without losing digits for tiny xbar.
NearTipStress stress_ahead_of_tip(const DensitySolution& sol, double xbar);

double stress_intensity_factor(const DensitySolution& sol);
double j_integral(const DensitySolution& sol);

struct TipQuantities {
    double f1 = 0, g1 = 0;
    double K_I = 0, J = 0;
    double K_I_ratio = 0, J_ratio = 0;  // against the classical values
};

TipQuantities tip_quantities(const DensitySolution& sol);

// Closed-form classical crack.
double classical_sif(const CrackProblem& problem);
double classical_j(const CrackProblem& problem);
double classical_opening(const CrackProblem& problem, double x);
double classical_sigma_yy(const CrackProblem& problem, double x);

struct ClassicalBaseline {
    double K_I_closed = 0;
    double K_I_discrete = 0;
    double J_closed = 0;
    std::vector<double> x_samples;
    std::vector<double> cod_closed;
    std::vector<double> cod_discrete;
};

// Closed form next to the collocation solution of the classical Cauchy
// equation on the same kind of grid.
ClassicalBaseline classical_baseline(const CrackProblem& problem, int n = 128, int m_samples = 101);

struct PowerFit {
    double exponent = 0;
    double prefactor = 0;
};

// Least squares fit of y = C x^e on log scales. Uses |y|.
PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

// log-spaced xbar samples in [lo, hi]
std::vector<double> log_spaced(double lo, double hi, int count);

struct TipFit {
    double sigma_exponent = 0;   // of sigma_yy - sigma0
    double moment_exponent = 0;  // of m_yz
    double K_I = 0;              // intercept of sqrt(2 pi xbar) sigma_yy vs sqrt(xbar)
};

// Fits over xbar in [lo a, hi a].
TipFit fit_tip_field(const DensitySolution& sol, double lo = 1e-6, double hi = 1e-4, int samples = 25);

}  // namespace csdd::post
