#include "csdd/post.hpp"

#include "csdd/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csdd::post {

namespace {

constexpr double pi = std::numbers::pi;

// sum_{j>=1} c_j sin(j theta)/j
double sine_sum(const std::vector<double>& c, double theta)
{
    double acc = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j)
        acc += c[j] * std::sin(j * theta) / j;
    return acc;
}

double clamp_unit(double t)
{
    return std::max(-1.0, std::min(1.0, t));
}

// Exterior integrals on the right of the crack, t = 1 + eps:
//   cauchy = (1/pi) int h/(sqrt(1-s^2)(t-s)) ds
//   log    = (1/pi) int h ln(t-s)/sqrt(1-s^2) ds
struct Exterior {
    double cauchy;
    double log;
};

Exterior exterior(const std::vector<double>& c, double eps)
{
    const double root = std::sqrt(eps * (2.0 + eps));  // sqrt(t^2 - 1)
    const double rho = 1.0 + eps - root;
    const double eta = std::log1p(eps + root);         // acosh(t)
    double cauchy = 0.0, log_part = c[0] * (eta - std::numbers::ln2);
    double rj = 1.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        cauchy += c[j] * rj;
        if (j > 0)
            log_part -= c[j] * rj / j;
        rj *= rho;
    }
    return {cauchy / root, log_part};
}

std::vector<double> reflect(const std::vector<double>& c)
{
    std::vector<double> r(c);
    for (std::size_t j = 1; j < r.size(); j += 2)
        r[j] = -r[j];
    return r;
}

NearTipStress stress_outside(const DensitySolution& sol, double eps, bool right)
{
    const auto& pr = sol.problem;
    const double nu = pr.material.poisson_ratio;
    const double mu = pr.material.shear_modulus;
    const double a = pr.half_length;
    const double p = pr.p();
    const double t = 1.0 + eps;

    auto cf = chebyshev_series(sol.f_vals);
    auto cg = chebyshev_series(sol.g_vals);
    // On the left, s -> -s maps the problem onto the right side; odd
    // kernels change sign.
    const double odd = right ? 1.0 : -1.0;
    if (!right) {
        cf.coeffs = reflect(cf.coeffs);
        cg.coeffs = reflect(cg.coeffs);
    }

    const Exterior ef = exterior(cf.coeffs, eps);
    const Exterior eg = exterior(cg.coeffs, eps);

    // Regular parts by Gauss-Chebyshev on a finer grid.
    const int m = std::max(1024, 8 * sol.disc.n());
    double k1f = 0.0, k2f = 0.0, k2g = 0.0, k3g = 0.0;
    for (int i = 0; i < m; ++i) {
        const double s = std::cos((2.0 * i + 1.0) * pi / (2.0 * m));
        const double d = t - s;
        const double z = p * d;
        const double fs = cf(s), gs = cg(s);
        const double k2 = specfun::k2_reg(z, 1.0) + specfun::k0_log_reg(z, 1.0);
        k1f += fs * specfun::detail::k2_reg_minus_half(z) / d;
        k2f += fs * k2;
        k2g += gs * k2;
        k3g += gs * specfun::k3_reg(d, 1.0 / p);
    }
    k1f /= m;
    k2f /= m;
    k2g /= m;
    k3g /= m;

    // (1/pi) int h (ln(p(t-s)) - k2)/sqrt(1-s^2)
    const double lf = cf.coeffs[0] * std::log(p) + ef.log - k2f;
    const double lg = cg.coeffs[0] * std::log(p) + eg.log - k2g;

    const double cauchy = (3.0 - 2.0 * nu) / (2.0 * (1.0 - nu));
    const double sigma = pr.remote_tension / mu + odd * (cauchy * ef.cauchy + 2.0 * k1f) + lg;
    const double moment = odd * (-2.0 / (p * p) * eg.cauchy + k3g / (2.0 * p)) + lf;
    return {mu * sigma, mu * a * moment};
}

}  // namespace

double ChebyshevSeries::operator()(double s) const
{
    // Clenshaw recurrence
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;) {
        const double b0 = 2.0 * s * b1 - b2 + coeffs[j];
        b2 = b1;
        b1 = b0;
    }
    return s * b1 - b2 + (coeffs.empty() ? 0.0 : coeffs[0]);
}

ChebyshevSeries chebyshev_series(const std::vector<double>& v)
{
    const std::size_t n = v.size();
    ChebyshevSeries out;
    out.coeffs.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += v[i] * std::cos(j * (2.0 * i + 1.0) * pi / (2.0 * n));
        out.coeffs[j] = 2.0 * acc / n;
    }
    if (n > 0)
        out.coeffs[0] *= 0.5;
    return out;
}

double opening_at(const DensitySolution& sol, double x)
{
    const double a = sol.problem.half_length;
    if (std::abs(x) > a)
        throw std::domain_error("opening_at: |x| must not exceed a");
    const auto c = chebyshev_series(sol.f_vals);
    return a * sine_sum(c.coeffs, std::acos(clamp_unit(x / a)));
}

double rotation_jump_at(const DensitySolution& sol, double x)
{
    const double a = sol.problem.half_length;
    if (std::abs(x) > a)
        throw std::domain_error("rotation_jump_at: |x| must not exceed a");
    const auto c = chebyshev_series(sol.g_vals);
    return -sine_sum(c.coeffs, std::acos(clamp_unit(x / a)));
}

CrackProfiles crack_profiles(const DensitySolution& sol, int m_samples)
{
    if (m_samples < 1)
        throw std::domain_error("crack_profiles: need at least one sample");
    const double a = sol.problem.half_length;
    const auto cf = chebyshev_series(sol.f_vals);
    const auto cg = chebyshev_series(sol.g_vals);
    CrackProfiles out;
    for (int j = 0; j < m_samples; ++j) {
        const double x = -a + 2.0 * a * (j + 1.0) / (m_samples + 1.0);
        const double theta = std::acos(clamp_unit(x / a));
        out.x_samples.push_back(x);
        out.delta_uy.push_back(a * sine_sum(cf.coeffs, theta));
        out.delta_omega.push_back(-sine_sum(cg.coeffs, theta));
    }
    return out;
}

EndpointValues endpoint_values(const DensitySolution& sol)
{
    const auto cf = chebyshev_series(sol.f_vals);
    const auto cg = chebyshev_series(sol.g_vals);
    return {cf(1.0), cg(1.0), cf(-1.0), cg(-1.0)};
}

NearTipStress stress_ahead(const DensitySolution& sol, double x)
{
    const double a = sol.problem.half_length;
    if (!(std::abs(x) > a))
        throw std::domain_error("stress_ahead: |x| must exceed the half length");
    return stress_outside(sol, std::abs(x) / a - 1.0, x > 0.0);
}

NearTipStress stress_ahead_of_tip(const DensitySolution& sol, double xbar)
{
    if (!(xbar > 0.0))
        throw std::domain_error("stress_ahead_of_tip: xbar must be positive");
    return stress_outside(sol, xbar / sol.problem.half_length, true);
}

double stress_intensity_factor(const DensitySolution& sol)
{
    // sqrt(2 pi (x-a)) sigma_yy -> sqrt(pi a) mu (3-2nu)/(2(1-nu)) f(1)
    const auto& pr = sol.problem;
    const double nu = pr.material.poisson_ratio;
    const double f1 = endpoint_values(sol).f_plus;
    return std::sqrt(pi * pr.half_length) * pr.material.shear_modulus * (3.0 - 2.0 * nu) / (2.0 * (1.0 - nu)) * f1;
}

double j_integral(const DensitySolution& sol)
{
    const auto& pr = sol.problem;
    const double nu = pr.material.poisson_ratio;
    const auto e = endpoint_values(sol);
    const double la = pr.material.char_length / pr.half_length;
    return 0.5 * pr.material.shear_modulus * pi * pr.half_length
        * ((3.0 - 2.0 * nu) / (4.0 * (1.0 - nu)) * e.f_plus * e.f_plus + la * la * e.g_plus * e.g_plus);
}

TipQuantities tip_quantities(const DensitySolution& sol)
{
    const auto e = endpoint_values(sol);
    TipQuantities q;
    q.f1 = e.f_plus;
    q.g1 = e.g_plus;
    q.K_I = stress_intensity_factor(sol);
    q.J = j_integral(sol);
    q.K_I_ratio = q.K_I / classical_sif(sol.problem);
    q.J_ratio = q.J / classical_j(sol.problem);
    return q;
}

double classical_sif(const CrackProblem& problem)
{
    return problem.remote_tension * std::sqrt(pi * problem.half_length);
}

double classical_j(const CrackProblem& problem)
{
    const double nu = problem.material.poisson_ratio;
    const double s0 = problem.remote_tension;
    return pi * (1.0 - nu * nu) * s0 * s0 * problem.half_length / problem.material.youngs_modulus();
}

double classical_opening(const CrackProblem& problem, double x)
{
    const double a = problem.half_length;
    if (std::abs(x) >= a)
        return 0.0;
    const double nu = problem.material.poisson_ratio;
    return 2.0 * (1.0 - nu) * problem.remote_tension / problem.material.shear_modulus * std::sqrt(a * a - x * x);
}

double classical_sigma_yy(const CrackProblem& problem, double x)
{
    const double a = problem.half_length;
    if (!(std::abs(x) > a))
        throw std::domain_error("classical_sigma_yy: |x| must exceed the half length");
    return problem.remote_tension * std::abs(x) / std::sqrt((std::abs(x) - a) * (std::abs(x) + a));
}

ClassicalBaseline classical_baseline(const CrackProblem& problem, int n, int m_samples)
{
    problem.material.validate();
    if (!(problem.half_length > 0.0))
        throw std::domain_error("classical_baseline: half length must be positive");
    const sie::Discretization disc(n);
    const double nu = problem.material.poisson_ratio;
    const double mu = problem.material.shear_modulus;
    const double a = problem.half_length;
    const auto& s = disc.nodes();
    const auto& t = disc.collocation();

    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd rhs(n);
    for (int k = 0; k < n - 1; ++k) {
        for (int i = 0; i < n; ++i)
            A(k, i) = 1.0 / (2.0 * (1.0 - nu) * n * (t[k] - s[i]));
        rhs(k) = -problem.remote_tension / mu;
    }
    A.row(n - 1).setOnes();
    rhs(n - 1) = 0.0;
    const Eigen::VectorXd f = A.partialPivLu().solve(rhs);
    const std::vector<double> fv(f.data(), f.data() + n);
    const auto c = chebyshev_series(fv);

    ClassicalBaseline out;
    out.K_I_closed = classical_sif(problem);
    out.K_I_discrete = std::sqrt(pi * a) * mu / (2.0 * (1.0 - nu)) * c(1.0);
    out.J_closed = classical_j(problem);
    for (int j = 0; j < m_samples; ++j) {
        const double x = -a + 2.0 * a * (j + 1.0) / (m_samples + 1.0);
        out.x_samples.push_back(x);
        out.cod_closed.push_back(classical_opening(problem, x));
        out.cod_discrete.push_back(a * sine_sum(c.coeffs, std::acos(clamp_unit(x / a))));
    }
    return out;
}

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_power_law: need two or more matching samples");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    return {slope, std::exp(icpt)};
}

std::vector<double> log_spaced(double lo, double hi, int count)
{
    if (!(lo > 0.0 && hi > 0.0) || count < 1)
        throw std::invalid_argument("log_spaced: positive bounds and count required");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int i = 0; i < count; ++i)
        out[i] = std::exp(l0 + (l1 - l0) * i / (count - 1));
    return out;
}

TipFit fit_tip_field(const DensitySolution& sol, double lo, double hi, int samples)
{
    const double a = sol.problem.half_length;
    const double s0 = sol.problem.remote_tension;
    const auto xb = log_spaced(lo * a, hi * a, samples);
    std::vector<double> excess, moment;
    Eigen::MatrixXd A(samples, 2);
    Eigen::VectorXd b(samples);
    for (int i = 0; i < samples; ++i) {
        const auto st = stress_ahead_of_tip(sol, xb[i]);
        excess.push_back(st.sigma_yy - s0);
        moment.push_back(st.m_yz);
        A(i, 0) = 1.0;
        A(i, 1) = std::sqrt(xb[i]);
        b(i) = std::sqrt(2.0 * pi * xb[i]) * st.sigma_yy;
    }
    const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
    TipFit fit;
    fit.sigma_exponent = fit_power_law(xb, excess).exponent;
    fit.moment_exponent = fit_power_law(xb, moment).exponent;
    fit.K_I = coef(0);
    return fit;
}

}  // namespace csdd::post
