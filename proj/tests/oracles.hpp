#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "powsem/cyclo.hpp"

#include <cmath>
#include <complex>

namespace powsem::testing {

// Numerical embedding of Q(zeta_m) into C via zeta_m -> exp(2*pi*i/m).
inline std::complex<double> embed(const Cyclo& x) {
    const double pi = std::acos(-1.0);
    std::complex<double> acc(0.0, 0.0);
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        double v = c[i].get_d();
        double arg = 2.0 * pi * static_cast<double>(i) / static_cast<double>(x.conductor());
        acc += v * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

inline bool embeds_close(const Cyclo& x, std::complex<double> expected, double tol = 1e-9) {
    return std::abs(embed(x) - expected) < tol;
}

} // namespace powsem::testing
