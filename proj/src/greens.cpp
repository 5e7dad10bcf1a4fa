#include "csdd/greens.hpp"

#include "csdd/specfun.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace csdd::greens {

namespace {

constexpr double pi = std::numbers::pi;

void require_couple_stress(const MaterialParams& mat, const char* who)
{
    mat.validate();
    if (!(mat.char_length > 0.0))
        throw std::domain_error(std::string(who) + ": characteristic length must be positive");
}

// int_0^inf g(u) sin(u X) du for X > 0, where g decays at least like
// exp(-Y u) / u. Panels run between the zeros of the sine; once the
// terms alternate regularly the partial sums are accelerated by repeated
// averaging.
template <class G>
double sine_transform(G&& g, double X, double Y)
{
    const auto& rule = quad::legendre16();
    const double half = pi / X;
    const double decay_cut = Y > 0.0 ? 45.0 / Y : 1e300;

    auto panel = [&](double lo, double hi) {
        double sum = 0.0;
        const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = c + h * rule.nodes[i];
            sum += rule.weights[i] * g(u) * std::sin(u * X);
        }
        return sum * h;
    };

    constexpr int depth = 16;
    std::vector<double> partial;
    double total = 0.0;
    double last_estimate = 0.0;
    bool have_estimate = false;
    for (int k = 0; k < 20000; ++k) {
        const double lo = k * half, hi = (k + 1) * half;
        double a = 0.0;
        double u = lo;
        while (u < hi) {
            double step = std::max(1.0, 0.25 * u);
            if (Y > 0.0)
                step = std::min(step, 8.0 / Y);
            const double next = std::min(hi, u + step);
            a += panel(u, next);
            u = next;
            if (u > decay_cut)
                break;
        }
        total += a;
        if (hi > decay_cut)
            return total;
        partial.push_back(total);
        if (k >= 2 * depth && lo >= 8.0) {
            std::vector<double> s(partial.end() - depth, partial.end());
            for (int level = 1; level < depth; ++level)
                for (int j = 0; j + level < depth; ++j)
                    s[j] = 0.5 * (s[j] + s[j + 1]);
            const double estimate = s[0];
            if (have_estimate && std::abs(estimate - last_estimate) <= 1e-15 * std::max(1e-300, std::abs(estimate)))
                return estimate;
            last_estimate = estimate;
            have_estimate = true;
        }
    }
    return have_estimate ? last_estimate : total;
}

// Remainders after removing the exp(-Y u) leading behaviour, in scaled
// variables u = l xi, X = x/l, Y = y/l.
double i10_remainder(double X, double Y)
{
    auto g = [Y](double u) {
        const double a = std::sqrt(1.0 + u * u);
        return std::exp(-Y * u) * std::expm1(-Y / (a + u)) / u;
    };
    return sine_transform(g, X, Y);
}

double i11_remainder(double X, double Y)
{
    auto g = [Y](double u) {
        const double a = std::sqrt(1.0 + u * u);
        const double d = 1.0 / (a + u);  // a - u
        return std::exp(-Y * u) * (std::exp(-Y * d) * d / u + std::expm1(-Y * d));
    };
    return sine_transform(g, X, Y);
}

// I10 and I11 in scaled variables, with their limits on y = 0+.
double i10_scaled(double X, double Y)
{
    if (X == 0.0)
        return 0.0;
    if (Y == 0.0)
        return X > 0.0 ? 0.5 * pi : -0.5 * pi;
    const double sgn = X > 0.0 ? 1.0 : -1.0;
    return std::atan2(X, Y) + sgn * i10_remainder(std::abs(X), Y);
}

double i11_scaled(double X, double Y)
{
    if (X == 0.0)
        return 0.0;
    const double sgn = X > 0.0 ? 1.0 : -1.0;
    if (Y == 0.0)
        return 1.0 / X + sgn * specfun::detail::meijer_remainder(std::abs(X));
    return X / (X * X + Y * Y) + sgn * i11_remainder(std::abs(X), Y);
}

}  // namespace

void MaterialParams::validate() const
{
    if (!(shear_modulus > 0.0) || !std::isfinite(shear_modulus))
        throw std::domain_error("shear modulus must be positive");
    if (!(poisson_ratio > -1.0 && poisson_ratio <= 0.5))
        throw std::domain_error("Poisson ratio must lie in (-1, 0.5], got " + std::to_string(poisson_ratio));
    if (!(char_length >= 0.0) || !std::isfinite(char_length))
        throw std::domain_error("characteristic length must be non-negative");
}

double MaterialParams::lame_lambda() const
{
    if (poisson_ratio == 0.5)
        throw std::domain_error("lame_lambda: incompressible material");
    return 2.0 * shear_modulus * poisson_ratio / (1.0 - 2.0 * poisson_ratio);
}

double MaterialParams::youngs_modulus() const
{
    return 2.0 * shear_modulus * (1.0 + poisson_ratio);
}

double line_sigma_yy(double x, const DefectCharge& charge, const MaterialParams& mat)
{
    require_couple_stress(mat, "line_sigma_yy");
    if (x == 0.0)
        throw std::domain_error("line_sigma_yy: x = 0 is the defect core");
    const double mu = mat.shear_modulus, nu = mat.poisson_ratio, ell = mat.char_length;
    const double b = charge.burgers, om = charge.frank;
    const double ax = std::abs(x);
    const double kr = specfun::k2_reg(ax, ell);
    const double k0 = specfun::bessel_k(0, ax / ell);
    return mu * b / (2.0 * pi * (1.0 - nu) * x) + 2.0 * mu * b / (pi * x) * kr
        - mu * om / pi * kr - mu * om / pi * k0;
}

double line_m_yz(double x, const DefectCharge& charge, const MaterialParams& mat)
{
    require_couple_stress(mat, "line_m_yz");
    if (x == 0.0)
        throw std::domain_error("line_m_yz: x = 0 is the defect core");
    const double mu = mat.shear_modulus, ell = mat.char_length;
    const double b = charge.burgers, om = charge.frank;
    const double ax = std::abs(x);
    const double kr = specfun::k2_reg(ax, ell);
    const double k0 = specfun::bessel_k(0, ax / ell);
    return -mu * b / pi * (kr + k0) + mu * ell * om / (2.0 * pi) * specfun::meijer_kernel(x, ell);
}

double semi_infinite_integral(SemiInfinite which, double x, double y, double ell)
{
    if (!(ell > 0.0))
        throw std::domain_error("semi_infinite_integral: ell must be positive");
    if (!(y > 0.0))
        throw std::domain_error("semi_infinite_integral: y must be positive");
    const double X = x / ell, Y = y / ell;
    return which == SemiInfinite::I10 ? i10_scaled(X, Y) : i11_scaled(X, Y);
}

FieldState full_field(double x, double y, const DefectCharge& charge, const MaterialParams& mat)
{
    require_couple_stress(mat, "full_field");
    if (y < 0.0)
        throw std::domain_error("full_field: y must be non-negative");
    if (x == 0.0 && y == 0.0)
        throw std::domain_error("full_field: (0, 0) is the defect core");

    const double mu = mat.shear_modulus, nu = mat.poisson_ratio, ell = mat.char_length;
    const double b = charge.burgers, om = charge.frank;

    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    const double r4 = r2 * r2;
    const double R = r / ell;
    const double k0 = specfun::bessel_k(0, R);
    const double k1 = specfun::bessel_k(1, R);
    // q = K2(R) - 2 l^2/r^2, finite at the core
    const double q = -specfun::k2_reg(r, ell);
    // K1(R)/(l r) = (K2 - K0)/(2 l^2)
    const double k1lr = k1 / (ell * r);
    const double theta = std::atan2(y, x);

    const double X = x / ell, Y = y / ell;
    const bool need_integrals = om != 0.0;
    const double i10 = need_integrals ? i10_scaled(X, Y) : 0.0;
    const double i11 = need_integrals ? i11_scaled(X, Y) : 0.0;
    const double i6 = y * k1lr;

    FieldState s;

    // climb dislocation
    const double cc = mu * b / (2.0 * pi * (1.0 - nu));
    const double normal = 2.0 * mu * b / pi * (x * q * (3.0 * y * y - x * x) / r4 + x * y * y * k1lr / r2);
    s.sxx = cc * x * (x * x - y * y) / r4 - normal;
    s.syy = cc * x * (x * x + 3.0 * y * y) / r4 + normal;
    s.syx = cc * y * (x * x - y * y) / r4
        + mu * b / pi * (2.0 * y * q * (3.0 * x * x - y * y) / r4 + 2.0 * x * x * y * k1lr / r2);
    // Laplacian of the rotation is b I6 / (2 pi l^2)
    s.sxy = s.syx - 2.0 * mu * b / pi * i6;
    s.mxz = -2.0 * mu * b / pi * (x * y / r2) * q;
    s.myz = mu * b / pi * ((x * x - y * y) / r2) * q - mu * b / pi * k0;
    s.ux = b * (1.0 - 2.0 * nu) / (4.0 * pi * (1.0 - nu)) * std::log(R)
        + b * (y * y - x * x) / (8.0 * pi * (1.0 - nu) * r2)
        + b * (y * y - x * x) / (2.0 * pi * r2) * q + b / (2.0 * pi) * k0;
    s.uy = b / (2.0 * pi) * theta - b * x * y / (4.0 * pi * (1.0 - nu) * r2) - b * x * y / (pi * r2) * q;
    s.omega = b * y / (4.0 * pi * ell * ell) * (q - k0);

    if (om != 0.0) {
        // Stream function Omega l^2 (I10 - I1)/pi; the stresses follow from
        // its second derivatives with d/dx I10 = I6, d/dy I10 = -I11/l and
        // lap I10 = I10/l^2, together with the rotation gradient.
        const double normal_om = mu * om / pi * ((x * x - y * y) / r2 * q - k0);
        s.syy += normal_om;
        s.sxx -= normal_om;
        const double shear_om = -2.0 * mu * om / pi * (x * y / r2) * q;
        s.syx += shear_om;
        s.sxy += shear_om - 2.0 * mu * om / pi * i10;
        s.mxz += 2.0 * mu * om * ell * ell / pi * i6;
        s.myz += -2.0 * mu * om * ell / pi * i11;
        s.ux += -om * ell * ell * x / (pi * r2) + om * ell / pi * i11 + om * y / 4.0;
        s.uy += om * y / (2.0 * pi) * q - om * y / (2.0 * pi) * k0 - om * x / 4.0;
        s.omega += om / (2.0 * pi) * i10 - om / 4.0;
    }
    return s;
}

}  // namespace csdd::greens
