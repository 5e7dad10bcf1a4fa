#pragma once

#include <vector>

namespace csdd::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

// Gauss-Laguerre rule for int_0^inf exp(-u) f(u) du.
Rule gauss_laguerre(int n);

// Cached rules used by the library. Initialised once, read only afterwards.
const Rule& legendre16();
const Rule& laguerre32();

}  // namespace csdd::quad
