#pragma once
// Reference evaluations used by the tests. None of them call into the
// library; each is a slow but independent route to the same number.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

constexpr long double pi_l = 3.141592653589793238462643383279502884L;
constexpr long double gamma_l = 0.577215664901532860606512090082402431L;

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt by the trapezoid rule,
// which converges geometrically for this analytic, doubly decaying
// integrand. Returns exp(z) K_nu(z) so that large z does not underflow.
inline double bessel_k_scaled_integral(int order, double z)
{
    const long double h = 0.005L;
    long double sum = 0.5L;  // t = 0 contributes exp(0) cosh(0) / 2
    for (int k = 1;; ++k) {
        const long double t = k * h;
        const long double s = std::sinh(t / 2);
        const long double e = -2.0L * z * s * s;  // -z (cosh t - 1)
        const long double term = std::exp(e) * std::cosh(order * t);
        sum += term;
        if (e < -800.0L)
            break;
    }
    return static_cast<double>(sum * h);
}

inline double bessel_k_integral(int order, double z)
{
    return bessel_k_scaled_integral(order, z) * std::exp(-z);
}

// Ascending series with Euler's constant, in long double.
inline long double bessel_k0_series(long double z)
{
    const long double q = z * z / 4;
    long double term = 1, harmonic = 0, i0 = 0, rest = 0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term *= q / (static_cast<long double>(k) * k);
            harmonic += 1.0L / k;
        }
        i0 += term;
        rest += term * harmonic;
        if (term < 1e-30L * i0)
            break;
    }
    return -(std::log(z / 2) + gamma_l) * i0 + rest;
}

inline long double bessel_k1_series(long double z)
{
    const long double q = z * z / 4;
    long double term = 1;  // (z^2/4)^k / (k! (k+1)!)
    long double i1 = 0, rest = 0;
    long double psi_k1 = -gamma_l, psi_k2 = 1 - gamma_l;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term *= q / (static_cast<long double>(k) * (k + 1));
            psi_k1 += 1.0L / k;
            psi_k2 += 1.0L / (k + 1);
        }
        i1 += term;
        rest += term * (psi_k1 + psi_k2);
        if (term < 1e-30L * i1)
            break;
    }
    i1 *= z / 2;
    return 1 / z + std::log(z / 2) * i1 - z / 4 * rest;
}

// 2/z^2 - K2(z) - 1/2 from the ascending series of K2 with the singular
// terms removed analytically:
// (z^2/4) sum_k (z^2/4)^k / (k! (k+2)!) [ln(z/2) - (psi(k+1) + psi(k+3))/2]
inline long double k2_reg_minus_half_series(long double z)
{
    const long double q = z * z / 4;
    long double term = 0.5L;  // (z^2/4)^k / (k! (k+2)!)
    long double psi1 = -gamma_l, psi3 = 1.5L - gamma_l;
    long double sum = 0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term *= q / (static_cast<long double>(k) * (k + 2));
            psi1 += 1.0L / k;
            psi3 += 1.0L / (k + 2);
        }
        const long double add = term * (std::log(z / 2) - (psi1 + psi3) / 2);
        sum += add;
        if (std::abs(add) < 1e-30L * std::abs(sum))
            break;
    }
    return q * sum;
}

// Large-argument asymptotic series, truncated at its smallest term.
inline long double bessel_k_asymptotic(int order, long double z)
{
    const long double mu = 4.0L * order * order;
    long double term = 1, sum = 1, last = 1e300L;
    for (int k = 1; k < 200; ++k) {
        term *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (k * 8.0L * z);
        if (std::abs(term) >= last)
            break;
        sum += term;
        last = std::abs(term);
    }
    return std::sqrt(pi_l / (2 * z)) * std::exp(-z) * sum;
}

// Adaptive Simpson on [a, b] in long double.
inline long double adaptive_simpson(const std::function<long double(long double)>& f, long double a, long double b,
                                    long double tol, int depth = 50)
{
    std::function<long double(long double, long double, long double, long double, long double, long double,
                              long double, int)>
        rec = [&](long double lo, long double hi, long double flo, long double fmid, long double fhi,
                  long double whole, long double eps, int d) -> long double {
        const long double mid = (lo + hi) / 2;
        const long double lm = (lo + mid) / 2, rm = (mid + hi) / 2;
        const long double flm = f(lm), frm = f(rm);
        const long double left = (mid - lo) / 6 * (flo + 4 * flm + fmid);
        const long double right = (hi - mid) / 6 * (fmid + 4 * frm + fhi);
        const long double diff = left + right - whole;
        if (d <= 0 || std::abs(diff) <= 15 * eps)
            return left + right + diff / 15;
        return rec(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) + rec(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
    };
    const long double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const long double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return rec(a, b, fa, fm, fb, whole, tol, depth);
}

// Alternating series limit from partial sums by repeated averaging.
inline long double averaged_limit(std::vector<long double> partial, int levels)
{
    std::vector<long double> s(partial.end() - levels, partial.end());
    for (int level = 1; level < levels; ++level)
        for (int j = 0; j + level < levels; ++j)
            s[j] = (s[j] + s[j + 1]) / 2;
    return s[0];
}

// int_0^inf g(u) sin(u X) du summed over half periods of the sine and
// accelerated; suitable when g decays algebraically. at_origin is the
// limit of g(u) sin(u X) as u -> 0.
inline long double half_period_sine_integral(const std::function<long double(long double)>& g, long double X,
                                             long double at_origin, int periods, int levels, long double tol)
{
    const long double half = pi_l / X;
    std::vector<long double> partial;
    long double total = 0;
    for (int k = 0; k < periods; ++k) {
        auto f = [&](long double u) { return u == 0 ? at_origin : g(u) * std::sin(u * X); };
        total += adaptive_simpson(f, k * half, (k + 1) * half, tol);
        partial.push_back(total);
    }
    return averaged_limit(partial, levels);
}

// The disclination couple-stress kernel with l = 1 from its finite-part
// Fourier representation -4 fp int_0^inf (a(u)/u) sin(u X) du, a = sqrt(1 + u^2).
// Splitting a/u = 1 + (a - u)/u, the first piece has finite part 1/X and
// the second converges; a - u is formed as 1/(a + u).
inline double meijer_finite_part(double X)
{
    auto g = [](long double u) -> long double {
        const long double a = std::sqrt(1 + u * u);
        return 1 / ((a + u) * u);
    };
    const long double ax = std::abs(static_cast<long double>(X));
    const long double rest = half_period_sine_integral(g, ax, ax, 400, 40, 1e-17L);
    const long double s = X > 0 ? 1 : -1;
    return static_cast<double>(-4 * s * (1 / std::abs(static_cast<long double>(X)) + rest));
}

// int_{-1}^{1} h(s) ln|t - s| / sqrt(1 - s^2) ds by the substitution
// s = cos(theta), split at the logarithmic singularity, with tanh-sinh
// quadrature on each side.
inline double log_weighted_integral(const std::function<double(double)>& h, double t)
{
    const long double th0 = std::acos(static_cast<long double>(t));
    auto integrand = [&](long double th) -> long double {
        // t - cos(th) as a product of sines, exact near the singularity
        const long double gap = -2 * std::sin((th0 + th) / 2) * std::sin((th0 - th) / 2);
        return h(static_cast<double>(std::cos(th))) * std::log(std::abs(gap));
    };
    auto tanh_sinh = [&](long double a, long double b) {
        const long double r = (b - a) / 2;
        const long double step = 1.0L / 64;
        long double sum = 0;
        for (int k = -400; k <= 400; ++k) {
            const long double x = k * step;
            const long double u = pi_l / 2 * std::sinh(x);
            const long double ch = std::cosh(u);
            const long double node = std::tanh(u);
            const long double w = pi_l / 2 * std::cosh(x) / (ch * ch);
            if (w < 1e-300L)
                continue;
            // distance from the nearer endpoint, computed without cancellation
            const long double d = 1 / (std::exp(2 * std::abs(u)) + 1) * 2;
            const long double th = node >= 0 ? b - r * d : a + r * d;
            if (th <= a || th >= b)
                continue;
            sum += w * integrand(th);
        }
        return sum * step * r;
    };
    return static_cast<double>(tanh_sinh(0, th0) + tanh_sinh(th0, pi_l));
}

// Finite-difference weights for derivative orders 0..max_order on the
// offsets z, evaluated at 0.
inline std::vector<std::vector<double>> fd_weights(const std::vector<double>& z, int max_order)
{
    const int n = static_cast<int>(z.size());
    std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(n, 0.0));
    double c1 = 1, c4 = z[0];
    c[0][0] = 1;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, max_order);
        double c2 = 1, c5 = c4;
        c4 = z[i];
        for (int j = 0; j < i; ++j) {
            const double c3 = z[i] - z[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

inline std::vector<double> centered_offsets(int half, double h)
{
    std::vector<double> z;
    for (int i = -half; i <= half; ++i)
        z.push_back(i * h);
    return z;
}

// Tensor-product derivative d^{ox+oy} u / dx^ox dy^oy from samples on a
// square stencil stored row-major (x index outer).
inline double mixed_derivative(const std::vector<double>& samples, const std::vector<std::vector<double>>& w,
                               int ox, int oy)
{
    const int n = static_cast<int>(w[0].size());
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        if (w[ox][i] == 0.0)
            continue;
        for (int j = 0; j < n; ++j)
            sum += w[ox][i] * w[oy][j] * samples[i * n + j];
    }
    return sum;
}

// Closed-form classical crack under remote tension, plane strain.
inline double classical_opening(double nu, double mu, double sigma0, double a, double x)
{
    return 2.0 * (1.0 - nu) * sigma0 / mu * std::sqrt(a * a - x * x);
}

}  // namespace oracle
