#pragma once

// Euler-Mascheroni constant and its shifted generalizations
//   gamma_c = lim_{T->inf} [ sum_{i=0}^{T} (c + i^2)^{-1/2} - log T ],
// the constant that drives the second coefficient of the shifted divisor
// asymptotics. Nothing here is a hard-coded literal: gamma is summed with
// Euler-Maclaurin corrections and gamma_c through a telescoped series whose
// tail is bounded explicitly, so every returned error bound is a guarantee.

#include <cmath>
#include <cstdint>

#include "speclab/errors.hpp"

namespace speclab {

struct ConstantResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::uint64_t terms_used = 0;
};

namespace detail {

// Compensated accumulator; keeps long-tail rounding at ~eps instead of T*eps.
struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail

// gamma = H_N - log N - 1/(2N) + 1/(12 N^2) - 1/(120 N^4) + 1/(252 N^6) - R,
// 0 < R < 1/(240 N^8).  1/x is completely monotone, so the remainder is
// bounded by the first omitted term.
inline ConstantResult euler_gamma(double tol) {
    if (!(tol >= 1e-14))
        throw domain_error("constants", "euler_gamma tolerance below the double-precision floor 1e-14");
    std::uint64_t n = 16;
    while (1.0 / (240.0 * std::pow(static_cast<double>(n), 8.0)) > 0.5 * tol) n *= 2;

    detail::KahanSum h;
    for (std::uint64_t i = n; i >= 1; --i) h.add(1.0 / static_cast<double>(i));
    double nd = static_cast<double>(n);
    double value = h.sum - std::log(nd) - 1.0 / (2.0 * nd) + 1.0 / (12.0 * nd * nd) -
                   1.0 / (120.0 * std::pow(nd, 4.0)) + 1.0 / (252.0 * std::pow(nd, 6.0));
    double bound = 1.0 / (240.0 * std::pow(nd, 8.0)) + 4e-16;
    return {value, bound, n};
}

// Accelerated identity:
//   gamma_c = gamma + c^{-1/2} + sum_{i>=1} [ (c + i^2)^{-1/2} - 1/i ],
// truncated at T = ceil(sqrt(c / (2 tol))); the tail is <= c/(4 T^2) since
// |(c+i^2)^{-1/2} - 1/i| <= c/(2 i^3). The bound on the last included term is
// asserted at runtime, so tol is a guarantee rather than a hope.
inline ConstantResult gamma_c(double c, double tol = 1e-12) {
    if (!(c > 0.0))
        throw domain_error("constants", "gamma_c requires c > 0 (the defining sequence diverges as c -> 0+)");
    if (!(tol >= 1e-13))
        throw domain_error("constants", "gamma_c tolerance below the double-precision floor 1e-13");

    auto t_count = static_cast<std::uint64_t>(std::ceil(std::sqrt(c / (2.0 * tol))));
    if (t_count < 8) t_count = 8;

    ConstantResult g = euler_gamma(std::max(tol / 4.0, 1e-14));

    // last included term obeys the telescoping bound, up to the rounding
    // noise of the two reciprocals (~eps/T each)
    {
        double td = static_cast<double>(t_count);
        double last = std::fabs(1.0 / std::sqrt(c + td * td) - 1.0 / td);
        if (last > c / (2.0 * td * td * td) + 2e-15 / td)
            throw domain_error("constants", "gamma_c internal tail-bound check failed");
    }

    detail::KahanSum acc;
    for (std::uint64_t i = t_count; i >= 1; --i) {
        double id = static_cast<double>(i);
        acc.add(1.0 / std::sqrt(c + id * id) - 1.0 / id);
    }

    double td = static_cast<double>(t_count);
    double value = g.value + 1.0 / std::sqrt(c) + acc.sum;
    double bound = c / (4.0 * td * td) + g.error_bound +
                   8e-15 * (2.0 + std::log(td));
    return {value, bound, t_count};
}

// 2 gamma_c - 1, the lambda-coefficient of the shifted divisor count.
inline double second_divisor_coefficient(double c, double tol = 1e-12) {
    return 2.0 * gamma_c(c, tol).value - 1.0;
}

}  // namespace speclab
