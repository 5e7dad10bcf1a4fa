#include "csdd/sie.hpp"

#include "csdd/specfun.hpp"
#include "parallel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace csdd::sie {

namespace {

constexpr double pi = std::numbers::pi;

std::string describe(int n, double p, double nu)
{
    std::ostringstream os;
    os.precision(12);
    os << " (n=" << n << ", p=" << p << ", nu=" << nu << ")";
    return os.str();
}

}  // namespace

double CrackProblem::p() const
{
    if (!(material.char_length > 0.0))
        throw std::domain_error("a/l undefined for l = 0");
    return half_length / material.char_length;
}

void CrackProblem::validate() const
{
    if (!(half_length > 0.0) || !std::isfinite(half_length))
        throw std::domain_error("crack half length must be positive");
    if (!std::isfinite(remote_tension))
        throw std::domain_error("remote tension must be finite");
    material.validate();
    if (!(material.char_length > 0.0))
        throw std::domain_error("characteristic length must be positive for the couple-stress solve");
}

Discretization::Discretization(int n)
    : n_(n)
{
    if (n < 8)
        throw std::domain_error("discretization needs n >= 8, got " + std::to_string(n));
    nodes_.resize(n);
    colloc_.resize(n - 1);
    for (int i = 0; i < n; ++i)
        nodes_[i] = std::cos((2.0 * i + 1.0) * pi / (2.0 * n));
    for (int k = 0; k < n - 1; ++k)
        colloc_[k] = std::cos((k + 1.0) * pi / n);
}

double Discretization::chebyshev_t(double t) const
{
    if (std::abs(t) <= 1.0)
        return std::cos(n_ * std::acos(t));
    const double sgn = (t < 0.0 && n_ % 2 == 1) ? -1.0 : 1.0;
    return sgn * std::cosh(n_ * std::acosh(std::abs(t)));
}

double Discretization::chebyshev_t_prime_at_node(int i) const
{
    const double theta = (2.0 * i + 1.0) * pi / (2.0 * n_);
    const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
    return n_ * sgn / std::sin(theta);
}

SolverError::SolverError(const std::string& what, int n_, double p_, double nu_)
    : std::runtime_error(what + describe(n_, p_, nu_))
    , n(n_)
    , p(p_)
    , nu(nu_)
{
}

double kernel_k1(double x, double xi, double a, double ell)
{
    if (!(ell > 0.0))
        throw std::domain_error("kernel_k1: ell must be positive");
    const double d = x - xi;
    if (d == 0.0)
        return 0.0;
    // a/d [k2_reg - 1/2], the subtraction fused into the series
    return a / d * specfun::detail::k2_reg_minus_half(std::abs(d) / ell);
}

double kernel_k2(double x, double xi, double ell)
{
    const double d = std::abs(x - xi);
    return specfun::k2_reg(d, ell) + specfun::k0_log_reg(d, ell);
}

double kernel_k3(double x, double xi, double ell)
{
    return specfun::k3_reg(x - xi, ell);
}

double log_quadrature_weight(double t, const Discretization& disc, double p)
{
    if (!(p > 0.0))
        throw std::domain_error("log_quadrature_weight: p must be positive");
    double sum = 0.0;
    for (double s : disc.nodes()) {
        if (t == s)
            throw std::domain_error("log_quadrature_weight: t coincides with a node");
        sum += std::log(p * std::abs(t - s));
    }
    return -pi / disc.n() * sum + pi * std::log(0.5 * p);
}

LinearSystem assemble(const CrackProblem& problem, const Discretization& disc, const AssemblyOptions& options)
{
    problem.validate();
    const int n = disc.n();
    const double p = problem.p();
    const double nu = problem.material.poisson_ratio;
    const double cauchy = (3.0 - 2.0 * nu) / (2.0 * (1.0 - nu) * n);
    const double classical_cauchy = 1.0 / (2.0 * (1.0 - nu) * n);
    const double row_scale = options.scale_rotation_rows ? 1.0 / std::max(1.0, 2.0 / (p * p)) : 1.0;
    const auto& s = disc.nodes();
    const auto& t = disc.collocation();

    std::vector<double> tprime(n);
    for (int i = 0; i < n; ++i)
        tprime[i] = disc.chebyshev_t_prime_at_node(i);

    LinearSystem sys;
    sys.matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    sys.rhs = Eigen::VectorXd::Zero(2 * n);
    auto& A = sys.matrix;

    detail::parallel_for(static_cast<std::size_t>(n - 1), [&](std::size_t kk) {
        const int k = static_cast<int>(kk);
        const double tk = t[k];
        const int force_row = k;
        const int moment_row = n - 1 + k;
        if (options.classical_limit) {
            for (int i = 0; i < n; ++i) {
                const double d = tk - s[i];
                A(force_row, i) = classical_cauchy / d;
                A(moment_row, n + i) = 1.0 / (n * d);
            }
            return;
        }
        const double gn = log_quadrature_weight(tk, disc, p);
        const double tn = disc.chebyshev_t(tk);
        for (int i = 0; i < n; ++i) {
            const double d = tk - s[i];
            const double z = p * std::abs(d);
            // Lagrange factor of the interpolant in the log-kernel correction
            const double lag = gn * tn / (d * tprime[i]) / pi;
            // ln(p|t-s|) - k2 = -(k2_reg + K0), evaluated without cancellation
            const double log_minus_k2 = -(specfun::k2_reg(z, 1.0) + (z > 0.0 ? specfun::bessel_k(0, z) : 0.0));
            const double k1 = specfun::detail::k2_reg_minus_half(z) / d;
            const double k3 = specfun::k3_reg(d, 1.0 / p);
            const double coupling = log_minus_k2 / n + lag;
            A(force_row, i) = cauchy / d + 2.0 / n * k1;
            A(force_row, n + i) = coupling;
            A(moment_row, i) = row_scale * coupling;
            A(moment_row, n + i) = row_scale * (-2.0 / (p * p * n) / d + k3 / (2.0 * p * n));
        }
    });

    const double load = problem.remote_tension / problem.material.shear_modulus;
    for (int k = 0; k < n - 1; ++k)
        sys.rhs(k) = -load;
    for (int i = 0; i < n; ++i) {
        A(2 * n - 2, i) = 1.0;
        A(2 * n - 1, n + i) = 1.0;
    }
    return sys;
}

DensitySolution solve(const CrackProblem& problem, const Discretization& disc)
{
    const double nu = problem.material.poisson_ratio;
    const LinearSystem sys = assemble(problem, disc);
    const int n = disc.n();
    const double p = problem.p();

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
    const double rcond = lu.rcond();
    if (!(rcond > min_rcond))
        throw SolverError("collocation matrix is singular or ill conditioned, rcond=" + std::to_string(rcond), n, p, nu);
    const Eigen::VectorXd x = lu.solve(sys.rhs);
    if (!x.allFinite())
        throw SolverError("non-finite densities", n, p, nu);

    const Eigen::VectorXd r = sys.matrix * x - sys.rhs;
    const double scale = sys.matrix.lpNorm<Eigen::Infinity>() * x.lpNorm<Eigen::Infinity>() + sys.rhs.lpNorm<Eigen::Infinity>();
    const double residual = scale > 0.0 ? r.lpNorm<Eigen::Infinity>() / scale : 0.0;
    if (residual > 1e-10)
        throw SolverError("residual check failed, relative residual=" + std::to_string(residual), n, p, nu);

    DensitySolution sol{
        std::vector<double>(x.data(), x.data() + n),
        std::vector<double>(x.data() + n, x.data() + 2 * n),
        problem,
        disc,
        rcond,
        residual,
        {},
    };
    if (p < small_p_warning) {
        std::ostringstream os;
        os << "a/l = " << p << " < " << small_p_warning << ": crack shorter than the characteristic length";
        sol.warnings.push_back(os.str());
    }
    return sol;
}

}  // namespace csdd::sie
