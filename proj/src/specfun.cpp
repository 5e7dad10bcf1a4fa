#include "csdd/specfun.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace csdd::specfun {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double eps = 1e-17;
constexpr int max_terms = 60;

void require_positive_length(double ell, const char* who)
{
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw std::domain_error(std::string(who) + ": ell must be positive, got " + std::to_string(ell));
}

}  // namespace

namespace detail {

BesselPair bessel_series(double z)
{
    // K0 = -(ln(z/2)+g) I0 + sum H_k y^k/(k!)^2
    // K1 = 1/z + ln(z/2) I1 - (z/4) sum [psi(k+1)+psi(k+2)] y^k/(k!(k+1)!)
    const double y = 0.25 * z * z;
    const double lz = std::log(0.5 * z);
    double t0 = 1.0;       // y^k/(k!)^2
    double t1 = 1.0;       // y^k/(k!(k+1)!)
    double harm = 0.0;     // H_k
    double i0 = 0.0, s0 = 0.0, i1 = 0.0, s1 = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            t0 *= y / (double(k) * k);
            t1 *= y / (double(k) * (k + 1));
            harm += 1.0 / k;
        }
        const double psi_sum = -2.0 * euler_gamma + 2.0 * harm + 1.0 / (k + 1);
        i0 += t0;
        s0 += harm * t0;
        i1 += t1;
        s1 += psi_sum * t1;
        if (t0 < eps * i0 && k > 2)
            break;
    }
    BesselPair out;
    out.k0 = -(lz + euler_gamma) * i0 + s0;
    out.k1 = 1.0 / z + lz * 0.5 * z * i1 - 0.25 * z * s1;
    return out;
}

BesselPair bessel_cf_scaled(double z)
{
    // Steed's algorithm for the continued fraction of K_nu, nu = 0
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2.0 * i;
        c = -c * a / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17 && std::abs(delh / h) < 1e-17)
            break;
    }
    BesselPair out;
    out.k0 = std::sqrt(pi / (2.0 * z)) / s;
    out.k1 = out.k0 * (z + 0.5 - a1 * h) / z;
    return out;
}

namespace {

double k2_reg_minus_half_series(double z)
{
    if (z == 0.0)
        return 0.0;
    // y sum y^k/(k!(k+2)!) [ln(z/2) - (psi(k+1)+psi(k+3))/2]
    const double y = 0.25 * z * z;
    const double lz = std::log(0.5 * z);
    double t = 0.5;        // y^k/(k!(k+2)!)
    double harm = 0.0;     // H_k
    double sum = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            t *= y / (double(k) * (k + 2));
            harm += 1.0 / k;
        }
        const double harm2 = harm + 1.0 / (k + 1) + 1.0 / (k + 2);
        const double term = t * (lz + euler_gamma - 0.5 * (harm + harm2));
        sum += term;
        if (std::abs(term) < eps * std::abs(sum) && k > 2)
            break;
    }
    return y * sum;
}

}  // namespace

double k2_reg_minus_half(double z)
{
    return z > bessel_switch ? k2_reg_direct(z) - 0.5 : k2_reg_minus_half_series(z);
}

double k2_reg_series(double z)
{
    return 0.5 + k2_reg_minus_half_series(z);
}

double k2_reg_direct(double z)
{
    // 2/z^2 - K2 with K2 = K0 + 2 K1 / z
    if (z > 700.0)
        return 2.0 / (z * z);
    const BesselPair k = z > bessel_switch ? bessel_cf_scaled(z) : bessel_series(z);
    const double scale = z > bessel_switch ? std::exp(-z) : 1.0;
    const double k2 = scale * (k.k0 + 2.0 * k.k1 / z);
    return 2.0 / (z * z) - k2;
}

double k0_log_reg_series(double z)
{
    if (z == 0.0)
        return ln2 - euler_gamma;
    // ln 2 - g - (ln(z/2)+g)(I0-1) + sum_{k>=1} H_k y^k/(k!)^2
    const double y = 0.25 * z * z;
    const double lz = std::log(0.5 * z);
    double t = 1.0, harm = 0.0, i0m1 = 0.0, s = 0.0;
    for (int k = 1; k < max_terms; ++k) {
        t *= y / (double(k) * k);
        harm += 1.0 / k;
        i0m1 += t;
        s += harm * t;
        if (t < eps * (1.0 + i0m1))
            break;
    }
    return ln2 - euler_gamma - (lz + euler_gamma) * i0m1 + s;
}

double k0_log_reg_direct(double z)
{
    return bessel_k(0, z) + std::log(z);
}

double meijer_remainder_series(double X)
{
    if (X == 0.0)
        return 0.0;
    // sum (X/2)^{2k}/(k!(k+1)!) X/(2k+1)
    //   [-(1/2)(ln(X/2) - 1/(2k+1)) + (psi(k+1)+psi(k+2))/4]
    const double y = 0.25 * X * X;
    const double lx = std::log(0.5 * X);
    double t = X;
    double harm = 0.0;
    double sum = 0.0;
    for (int k = 0; k < 2 * max_terms; ++k) {
        if (k > 0) {
            t *= y / (double(k) * (k + 1));
            harm += 1.0 / k;
        }
        const double m = 2.0 * k + 1.0;
        const double psi_sum = -2.0 * euler_gamma + 2.0 * harm + 1.0 / (k + 1);
        const double term = t / m * (-0.5 * (lx - 1.0 / m) + 0.25 * psi_sum);
        sum += term;
        if (std::abs(term) < eps * std::abs(sum) && k > 2)
            break;
    }
    return sum;
}

double meijer_remainder_tail(double X)
{
    // pi/2 - 1/X + int_X^inf K1(s)/s ds, the integral by Gauss-Laguerre
    const auto& rule = quad::laguerre32();
    double t = 0.0;
    if (X < 745.0) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = X + rule.nodes[i];
            t += rule.weights[i] * bessel_cf_scaled(s).k1 / s;
        }
        t *= std::exp(-X);
    }
    return 0.5 * pi - 1.0 / X + t;
}

double meijer_remainder(double X)
{
    return X <= meijer_switch ? meijer_remainder_series(X) : meijer_remainder_tail(X);
}

}  // namespace detail

double bessel_k(int order, double z)
{
    if (order < 0 || order > 2)
        throw std::domain_error("bessel_k: order must be 0, 1 or 2, got " + std::to_string(order));
    if (!(z > 0.0))
        throw std::domain_error("bessel_k: argument must be positive, got " + std::to_string(z));
    if (z > detail::bessel_switch)
        return std::exp(-z) * bessel_k_scaled(order, z);
    const auto k = detail::bessel_series(z);
    switch (order) {
    case 0: return k.k0;
    case 1: return k.k1;
    default: return k.k0 + 2.0 * k.k1 / z;
    }
}

double bessel_k_scaled(int order, double z)
{
    if (order < 0 || order > 2)
        throw std::domain_error("bessel_k_scaled: order must be 0, 1 or 2, got " + std::to_string(order));
    if (!(z > 0.0))
        throw std::domain_error("bessel_k_scaled: argument must be positive, got " + std::to_string(z));
    if (z <= detail::bessel_switch)
        return std::exp(z) * bessel_k(order, z);
    const auto k = detail::bessel_cf_scaled(z);
    switch (order) {
    case 0: return k.k0;
    case 1: return k.k1;
    default: return k.k0 + 2.0 * k.k1 / z;
    }
}

double k2_reg(double x_abs, double ell)
{
    require_positive_length(ell, "k2_reg");
    const double z = std::abs(x_abs) / ell;
    return z <= detail::bessel_switch ? 0.5 + detail::k2_reg_minus_half(z) : detail::k2_reg_direct(z);
}

double k0_log_reg(double x_abs, double ell)
{
    require_positive_length(ell, "k0_log_reg");
    const double z = std::abs(x_abs) / ell;
    return z <= detail::bessel_switch ? detail::k0_log_reg_series(z) : detail::k0_log_reg_direct(z);
}

double meijer_kernel(double x, double ell)
{
    require_positive_length(ell, "meijer_kernel");
    if (x == 0.0)
        throw std::domain_error("meijer_kernel: x = 0 is singular, use k3_reg");
    return -4.0 * ell / x + k3_reg(x, ell);
}

double k3_reg(double x, double ell)
{
    require_positive_length(ell, "k3_reg");
    if (x == 0.0)
        return 0.0;
    const double h = detail::meijer_remainder(std::abs(x) / ell);
    return x > 0.0 ? -4.0 * h : 4.0 * h;
}

}  // namespace csdd::specfun
