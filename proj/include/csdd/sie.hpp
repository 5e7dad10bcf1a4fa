#pragma once

// Coupled singular integral equations for a mode I crack |x| < a, y = 0 in
// couple-stress elasticity, solved with Gauss-Chebyshev collocation. The
// unknowns are the regular parts f, g of the dislocation and disclination
// densities, B = f / sqrt(1 - s^2) and W = g / sqrt(1 - s^2) with s = x/a.
//
// The system is built in nondimensional form (mu = a = 1) so that it
// depends only on nu and p = a/l; the right hand side carries sigma0/mu,
// which makes f and g scale linearly with the load.

#include "csdd/greens.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace csdd::sie {

using greens::MaterialParams;

struct CrackProblem {
    double half_length = 1.0;     // a
    double remote_tension = 1.0;  // sigma0
    MaterialParams material;

    // a / l; throws when l = 0
    double p() const;
    void validate() const;
};

class Discretization {
public:
    explicit Discretization(int n = 128);

    int n() const { return n_; }
    // zeros of T_n, s_i = cos((2i - 1) pi / 2n), i = 1..n (stored from 0)
    const std::vector<double>& nodes() const { return nodes_; }
    // zeros of U_{n-1}, t_k = cos(k pi / n), k = 1..n-1 (stored from 0)
    const std::vector<double>& collocation() const { return colloc_; }

    double chebyshev_t(double t) const;
    // T_n'(s_i)
    double chebyshev_t_prime_at_node(int i) const;

private:
    int n_;
    std::vector<double> nodes_;
    std::vector<double> colloc_;
};

struct DensitySolution {
    std::vector<double> f_vals;
    std::vector<double> g_vals;
    CrackProblem problem;
    Discretization disc;
    // reciprocal condition estimate of the LU factorisation
    double rcond = 0.0;
    double relative_residual = 0.0;
    std::vector<std::string> warnings;
};

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int n, double p, double nu);
    int n;
    double p;
    double nu;
};

// Regular kernels. All accept coincident points.
double kernel_k1(double x, double xi, double a, double ell);
double kernel_k2(double x, double xi, double ell);
double kernel_k3(double x, double xi, double ell);

// G_n(t) = -(pi/n) sum ln(p |t - s_i|) + pi ln(p/2), the correction that
// turns the plain Gauss-Chebyshev sum into an exact rule for the log kernel
// applied to the Lagrange interpolant of the density.
double log_quadrature_weight(double t, const Discretization& disc, double p);

struct LinearSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};

struct AssemblyOptions {
    // Drop every term that carries l, leaving the classical Cauchy equation
    // for f and a pure Cauchy equation for g.
    bool classical_limit = false;
    bool scale_rotation_rows = true;
};

LinearSystem assemble(const CrackProblem& problem, const Discretization& disc,
                      const AssemblyOptions& options = {});

// Throws SolverError on a (numerically) singular system.
DensitySolution solve(const CrackProblem& problem, const Discretization& disc);

// Threshold on the reciprocal condition estimate below which solve fails.
inline constexpr double min_rcond = 1e-14;
// Below this p the continuum assumption a >> l is strained.
inline constexpr double small_p_warning = 1.0;

}  // namespace csdd::sie
