#pragma once

// Modified Bessel functions of the second kind and the regularized kernel
// combinations built from them. All arguments are lengths unless noted;
// every function is pure and thread safe.

namespace csdd::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// K_order(z) for order in {0, 1, 2}, z > 0.
double bessel_k(int order, double z);

// exp(z) * K_order(z), usable where K_order itself underflows.
double bessel_k_scaled(int order, double z);

// 2 l^2 / x^2 - K2(x/l), finite at x = 0 where it equals 1/2.
double k2_reg(double x_abs, double ell);

// K0(x/l) + ln(x/l), finite at x = 0 where it equals ln 2 - gamma.
double k0_log_reg(double x_abs, double ell);

// sgn(x) G^{2,1}_{1,3}(x^2/4l^2 | 1; -1/2, 1/2, 0), the kernel of the
// disclination couple stress. Behaves like -4l/x near zero and tends to
// -2 pi sgn(x) for |x| >> l. x = 0 is a domain error.
double meijer_kernel(double x, double ell);

// meijer_kernel(x, l) + 4l/x, extended by 0 at x = 0.
double k3_reg(double x, double ell);

namespace detail {

// Switch points between the power series and the large-argument branches.
inline constexpr double bessel_switch = 2.0;
inline constexpr double meijer_switch = 5.0;

struct BesselPair {
    double k0;
    double k1;
};

// K0, K1 by power series (accurate for z <= ~3).
BesselPair bessel_series(double z);
// exp(z) K0, exp(z) K1 by Steed's continued fraction (z >= ~1).
BesselPair bessel_cf_scaled(double z);

// Both branches of the regularized combinations, z = x/l >= 0.
double k2_reg_series(double z);
double k2_reg_direct(double z);
// k2_reg - 1/2 without the cancellation of the subtraction.
double k2_reg_minus_half(double z);
double k0_log_reg_series(double z);
double k0_log_reg_direct(double z);

// H(X) = int_0^X (1/s^2 - K1(s)/s) ds, so that meijer_kernel is
// -4 l/x - 4 sgn(x) H(|x|/l).
double meijer_remainder(double X);
double meijer_remainder_series(double X);
double meijer_remainder_tail(double X);

}  // namespace detail

}  // namespace csdd::specfun
