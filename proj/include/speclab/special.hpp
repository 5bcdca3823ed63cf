#pragma once

// Real-line Gamma and modified Bessel K, the only special functions the
// continuation formulas need. Both are self-contained so the continuation
// path carries no external dependency.

#include <cmath>
#include <limits>

#include "speclab/errors.hpp"

namespace speclab {

namespace detail {
// Lanczos, g = 7, 9 terms. Relative accuracy ~1e-14 on the real line.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace detail

// Gamma(x) for real x, reflection for x < 1/2. Poles at 0, -1, -2, ...
inline double gamma_fn(double x) {
    if (x < 0.5) {
        if (std::floor(x) == x)
            throw domain_error("special", "gamma pole at nonpositive integer");
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    double z = x - 1.0;
    double a = detail::kLanczos[0];
    for (int i = 1; i < 9; ++i) a += detail::kLanczos[i] / (z + i);
    double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du, x > 0.
// Trapezoid with step doubling; the integrand is even at u = 0 and decays
// double-exponentially, so each halving multiplies the digit count.
inline double bessel_k(double nu, double x, double rel_tol = 1e-14) {
    if (!(x > 0.0)) throw domain_error("special", "bessel_k requires x > 0");
    nu = std::fabs(nu);
    // truncation point: e^{-x(cosh U - 1) + nu U} <= e^{-40}
    double U = 5.0;
    for (int i = 0; i < 3; ++i) U = std::acosh(1.0 + (40.0 + nu * U) / x);

    auto trapezoid = [&](int n) {
        double h = U / n;
        double s = 0.5 * (std::exp(-x) +
                          std::exp(-x * std::cosh(U)) * std::cosh(nu * U));
        for (int i = 1; i < n; ++i) {
            double u = i * h;
            s += std::exp(-x * std::cosh(u)) * std::cosh(nu * u);
        }
        return s * h;
    };

    int n = 8;
    double prev = trapezoid(n);
    for (int level = 0; level < 14; ++level) {
        n *= 2;
        double cur = trapezoid(n);
        if (std::fabs(cur - prev) <= rel_tol * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace speclab
