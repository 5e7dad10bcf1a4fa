#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csdd::quad {

Rule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be positive");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // recompute derivative at the converged root
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

Rule gauss_laguerre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_laguerre: n must be positive");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // initial guesses after Stroud and Secrest
        if (i == 0)
            z = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            z += 15.0 / (1.0 + 2.5 * n);
        else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - r.nodes[i - 2]);
        }
        double pp = 0.0, p2 = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * z)
                break;
        }
        r.nodes[i] = z;
        r.weights[i] = -1.0 / (pp * n * p2);
    }
    return r;
}

const Rule& legendre16()
{
    static const Rule rule = gauss_legendre(16);
    return rule;
}

const Rule& laguerre32()
{
    static const Rule rule = gauss_laguerre(32);
    return rule;
}

}  // namespace csdd::quad
