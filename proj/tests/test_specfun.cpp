#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "csdd/specfun.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace csdd::specfun;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, i / double(count - 1)));
    return out;
}

}  // namespace

TEST_CASE("series oracle agrees with the asymptotic series at z = 10")
{
    const long double k0 = oracle::bessel_k0_series(10.0L);
    const long double k1 = oracle::bessel_k1_series(10.0L);
    CHECK(std::abs(k0 / oracle::bessel_k_asymptotic(0, 10.0L) - 1) < 1e-8);
    CHECK(std::abs(k1 / oracle::bessel_k_asymptotic(1, 10.0L) - 1) < 1e-8);
}

TEST_CASE("K0(1) matches the power series oracle")
{
    const double ref = static_cast<double>(oracle::bessel_k0_series(1.0L));
    CHECK(rel(bessel_k(0, 1.0), ref) < 1e-12);
    CHECK(rel(bessel_k(1, 1.0), static_cast<double>(oracle::bessel_k1_series(1.0L))) < 1e-12);
}

TEST_CASE("K0, K1, K2 match the integral representation over [1e-8, 700]")
{
    for (double z : log_grid(1e-8, 700.0, 61)) {
        for (int order = 0; order <= 2; ++order) {
            CAPTURE(z);
            CAPTURE(order);
            CHECK(rel(bessel_k_scaled(order, z), oracle::bessel_k_scaled_integral(order, z)) < 1e-12);
            CHECK(rel(bessel_k(order, z), oracle::bessel_k_integral(order, z)) < 1e-12);
        }
    }
}

TEST_CASE("frozen high precision values")
{
    CHECK(rel(bessel_k(0, 1e-3), 7.0236888005623813436) < 1e-13);
    CHECK(rel(bessel_k(1, 0.5), 1.6564411200033008937) < 1e-13);
    CHECK(rel(bessel_k(2, 3.0), 0.061510458471742037657) < 1e-13);
    CHECK(rel(bessel_k(0, 50.0), 3.4101677497894955139e-23) < 1e-13);
    CHECK(rel(bessel_k(2, 700.0), 4.6831281768188282127e-306) < 1e-12);
}

TEST_CASE("K0 decays to zero")
{
    CHECK(bessel_k(0, 700.0) > 0.0);
    CHECK(bessel_k(0, 700.0) < 1e-300);
    CHECK(bessel_k(0, 800.0) == doctest::Approx(0.0));
    CHECK(std::isfinite(bessel_k_scaled(0, 1e6)));
    CHECK(bessel_k_scaled(0, 1e6) == doctest::Approx(std::sqrt(pi / 2e6)).scale(0).epsilon(1e-6));
}

TEST_CASE("K2 behaves as 2/z^2 near zero")
{
    for (double z : {1e-4, 1e-6, 1e-8})
        CHECK(bessel_k(2, z) * z * z / 2 == doctest::Approx(1.0).scale(0).epsilon(10 * z));
}

TEST_CASE("bessel_k rejects bad arguments")
{
    CHECK_THROWS_AS(bessel_k(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(3, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_scaled(0, 0.0), std::domain_error);
}

TEST_CASE("recurrence K2 = K0 + 2 K1 / z")
{
    for (double z : log_grid(1e-6, 600.0, 80)) {
        CAPTURE(z);
        const double k0 = bessel_k_scaled(0, z), k1 = bessel_k_scaled(1, z), k2 = bessel_k_scaled(2, z);
        CHECK(rel(k2, k0 + 2.0 * k1 / z) < 1e-11);
    }
}

TEST_CASE("derivative of K0 is -K1")
{
    for (double z : {0.5, 1.0, 5.0}) {
        const double h = 1e-5;
        const double d = (bessel_k(0, z + h) - bessel_k(0, z - h)) / (2 * h);
        CHECK(rel(d, -bessel_k(1, z)) < 1e-8);
    }
}

TEST_CASE("Bessel branches agree at the switch point")
{
    const double z = detail::bessel_switch;
    const auto s = detail::bessel_series(z);
    const auto c = detail::bessel_cf_scaled(z);
    CHECK(rel(s.k0, c.k0 * std::exp(-z)) < 1e-12);
    CHECK(rel(s.k1, c.k1 * std::exp(-z)) < 1e-12);
}

TEST_CASE("k2_reg tends to 1/2 at the origin")
{
    // 2/z^2 - K2(z) from the long double series at z = 1e-3, where the
    // remainder beyond the constant is O(z^2 ln z).
    const long double z = 1e-3L;
    const long double k2 = oracle::bessel_k0_series(z) + 2 * oracle::bessel_k1_series(z) / z;
    const long double limit_estimate = 2 / (z * z) - k2;
    CHECK(std::abs(static_cast<double>(limit_estimate) - 0.5) < 1e-5);
    CHECK(k2_reg(1e-3, 1.0) == doctest::Approx(static_cast<double>(limit_estimate)).scale(0).epsilon(1e-11));
    CHECK(k2_reg(0.0, 1.0) == doctest::Approx(0.5).scale(0).epsilon(1e-15));
    CHECK(k2_reg(1e-9, 1.0) == doctest::Approx(0.5).scale(0).epsilon(1e-12));
}

TEST_CASE("k2_reg far from the origin")
{
    CHECK(std::abs(k2_reg(100.0, 1.0) - 2e-4) < 1e-6);
    CHECK(k2_reg(1e4, 1.0) == doctest::Approx(2e-8).scale(0).epsilon(1e-12));
}

TEST_CASE("k2_reg at x = l composes with the Bessel oracle")
{
    const double k2 = oracle::bessel_k_integral(2, 1.0);
    CHECK(std::abs(k2_reg(1.0, 1.0) - (2.0 - k2)) < 1e-12);
    CHECK(std::abs(k2_reg(1.0, 1.0) - 0.375161101364822517189) < 1e-14);
    // scale invariance in x / l
    CHECK(k2_reg(3.0, 3.0) == doctest::Approx(k2_reg(1.0, 1.0)).scale(0).epsilon(1e-15));
}

TEST_CASE("k0_log_reg limits and composition")
{
    CHECK(k0_log_reg(0.0, 1.0) == doctest::Approx(std::log(2.0) - euler_gamma).scale(0).epsilon(1e-15));
    CHECK(k0_log_reg(1e-9, 1.0) == doctest::Approx(std::log(2.0) - euler_gamma).scale(0).epsilon(1e-12));
    const long double z = 1e-2L;
    const double series = static_cast<double>(oracle::bessel_k0_series(z) + std::log(z));
    CHECK(k0_log_reg(1e-2, 1.0) == doctest::Approx(series).scale(0).epsilon(1e-13));
    CHECK(std::abs(k0_log_reg(50.0, 1.0) - std::log(50.0)) <= std::abs(bessel_k(0, 50.0)) + 1e-15);
    CHECK(std::abs(k0_log_reg(1.0, 1.0) - oracle::bessel_k_integral(0, 1.0)) < 1e-12);
}

TEST_CASE("regularized combinations reject non-positive l")
{
    CHECK_THROWS_AS(k2_reg(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(k0_log_reg(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(meijer_kernel(1.0, 0.0), std::domain_error);
}

TEST_CASE("regularized combinations are continuous across the branch switch")
{
    const double z = detail::bessel_switch;
    CHECK(std::abs(detail::k2_reg_series(z) - detail::k2_reg_direct(z)) < 1e-10);
    CHECK(std::abs(detail::k0_log_reg_series(z) - detail::k0_log_reg_direct(z)) < 1e-10);
    CHECK(std::abs(k2_reg(z * (1 - 1e-12), 1.0) - k2_reg(z * (1 + 1e-12), 1.0)) < 1e-10);
    CHECK(std::abs(k0_log_reg(z * (1 - 1e-12), 1.0) - k0_log_reg(z * (1 + 1e-12), 1.0)) < 1e-10);
    const double X = detail::meijer_switch;
    CHECK(std::abs(detail::meijer_remainder_series(X) - detail::meijer_remainder_tail(X)) < 1e-12);
}

TEST_CASE("meijer kernel matches frozen high precision values")
{
    struct Row {
        double x, value;
    };
    const Row rows[] = {{0.1, -40.784036898514322088}, {0.5, -10.334174563737799869}, {1.0, -7.3776683152840513638},
                        {2.0, -6.4541664645334044392}, {5.0, -6.2857280166952728541}, {8.0, -6.2832514180049944927},
                        {20.0, -6.2831853072892831381}};
    for (const auto& r : rows) {
        CAPTURE(r.x);
        CHECK(rel(meijer_kernel(r.x, 1.0), r.value) < 1e-13);
    }
}

TEST_CASE("meijer kernel matches the finite-part integral at x = 8 l")
{
    const double ref = oracle::meijer_finite_part(8.0);
    CHECK(rel(meijer_kernel(8.0, 1.0), ref) < 1e-8);
    CHECK(rel(meijer_kernel(16.0, 2.0), ref) < 1e-8);
    CHECK(rel(meijer_kernel(1.0, 1.0), oracle::meijer_finite_part(1.0)) < 1e-8);
    CHECK(rel(meijer_kernel(3.0, 1.0), oracle::meijer_finite_part(3.0)) < 1e-8);
}

TEST_CASE("meijer kernel is odd and has the expected limits")
{
    for (double x : {0.01, 0.3, 2.0, 7.0, 40.0})
        CHECK(meijer_kernel(-x, 1.0) == -meijer_kernel(x, 1.0));
    CHECK_THROWS_AS(meijer_kernel(0.0, 1.0), std::domain_error);
    // -4 l / x dominates near the origin
    const double x = 1e-6;
    CHECK(std::abs(meijer_kernel(x, 1.0) * x + 4.0) < 1e-10);
    CHECK(std::abs(meijer_kernel(x, 2.5) * x + 10.0) < 1e-10);
    // -2 pi sgn(x) far away
    CHECK(std::abs(meijer_kernel(50.0, 1.0) + 2 * pi) < 1e-12);
    CHECK(std::abs(meijer_kernel(-50.0, 1.0) - 2 * pi) < 1e-12);
}

TEST_CASE("small argument remainder k3_reg is (a1 + a2 ln x) x")
{
    // a2 = 2 / l and a1 = (2 gamma - 3 - 2 ln(2 l)) / l
    for (double ell : {1.0, 0.5, 3.0}) {
        for (double x : {1e-3, 1e-4}) {
            const double a1 = (2 * euler_gamma - 3 - 2 * std::log(2 * ell)) / ell;
            const double a2 = 2 / ell;
            const double remainder = k3_reg(x, ell);
            CAPTURE(ell);
            CAPTURE(x);
            CHECK(std::abs(remainder / x - (a1 + a2 * std::log(x))) < 10 * (x / ell) * (x / ell) * std::abs(std::log(x / ell)) / ell);
        }
    }
}

TEST_CASE("k3_reg vanishes at the origin, is odd and continuous")
{
    CHECK(k3_reg(0.0, 1.0) == 0.0);
    CHECK(k3_reg(0.0, 7.0) == 0.0);
    for (double x : {1e-3, 0.2, 4.0, 30.0})
        CHECK(k3_reg(-x, 1.0) == -k3_reg(x, 1.0));
    CHECK(std::abs(k3_reg(1e-6, 1.0)) < 1e-4);
    CHECK(std::abs(k3_reg(-1e-6, 1.0)) < 1e-4);
}

TEST_CASE("k3_reg at x = 0.1 l composes with the finite-part oracle")
{
    CHECK(std::abs(k3_reg(0.1, 1.0) - (oracle::meijer_finite_part(0.1) + 40.0)) < 1e-8);
}
