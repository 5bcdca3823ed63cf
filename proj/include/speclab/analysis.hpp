#pragma once

// Reconstructions of the published coefficient tables, remainder series for
// the divisor problem, and descriptive growth-exponent fits against the
// Hardy (1/4) and Huxley (131/416) benchmarks.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "speclab/constants.hpp"
#include "speclab/counting.hpp"
#include "speclab/errors.hpp"

namespace speclab {

struct RemainderStudy {
    std::vector<std::pair<double, double>> samples;  // (lambda, delta)
    double fitted_exponent = 0.0;
    double fit_rsquared = 0.0;
    static constexpr double hardy_exponent = 0.25;
    static constexpr double huxley_exponent = 131.0 / 416.0;
};

// Table estimators at height lambda. The pair count enters at threshold
// lambda^2 (the eigenvalue scale), so
//   first_est  = D_c(lambda^2) / (lambda log lambda),   target 1
//   second_est = (D_c(lambda^2) - lambda log lambda) / lambda,
//                                                target 2 gamma_c - 1.
inline std::pair<double, double> estimate_coefficients(double c, double lambda,
                                                       IndexBase base = IndexBase::from_zero) {
    if (!(lambda >= 1e3))
        throw domain_error("analysis", "estimate_coefficients needs lambda >= 1e3");
    if (lambda > 3e9)
        throw domain_error("analysis", "lambda^2 would overflow the exact pair count");
    const double d = static_cast<double>(shifted_pair_count(c, lambda * lambda, base));
    const double llog = lambda * std::log(lambda);
    return {d / llog, (d - llog) / lambda};
}

// Classical divisor remainder Delta(lambda) = D(lambda) - lambda log lambda -
// (2 gamma - 1) lambda on a sorted grid; the shifted variant replaces D by
// the pair count at lambda^2 and gamma by gamma_c.
inline RemainderStudy remainder_series(const std::vector<double>& lambda_grid, double c = 0.0) {
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        if (lambda_grid[i] < lambda_grid[i - 1])
            throw domain_error("analysis", "lambda grid must be sorted ascending");
    const double g = (c > 0.0) ? gamma_c(c).value : euler_gamma(1e-13).value;
    RemainderStudy study;
    study.samples.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        const double exact = (c > 0.0)
                                 ? static_cast<double>(shifted_pair_count(c, lam * lam))
                                 : static_cast<double>(divisor_summatory(lam));
        const double delta = exact - lam * std::log(lam) - (2.0 * g - 1.0) * lam;
        study.samples.emplace_back(lam, delta);
    }
    return study;
}

// Least-squares slope of log(running max |Delta|) against log(lambda).
// The running max is what the Hardy/Huxley exponents bound; raw |Delta|
// oscillates through zero and has no power law.
inline double exponent_fit(RemainderStudy& study) {
    const auto& samples = study.samples;
    if (samples.size() < 20)
        throw domain_error("analysis", "exponent fit needs at least 20 samples");
    if (samples.back().first < 1e3 * samples.front().first)
        throw domain_error("analysis", "exponent fit needs a span of at least 3 decades");

    double run = 0.0;
    std::vector<std::pair<double, double>> pts;  // (log lambda, log runmax)
    pts.reserve(samples.size());
    for (const auto& [lam, delta] : samples) {
        run = std::max(run, std::fabs(delta));
        if (run > 0.0) pts.emplace_back(std::log(lam), std::log(run));
    }
    if (pts.size() < 20) throw domain_error("analysis", "too few nonzero remainders");

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
        sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw domain_error("analysis", "degenerate abscissa span");
    const double slope = (n * sxy - sx * sy) / denom;
    const double sst = syy - sy * sy / n;
    const double ssr = slope * (sxy - sx * sy / n);
    study.fitted_exponent = slope;
    study.fit_rsquared = (sst > 0.0) ? ssr / sst : 1.0;
    return slope;
}

inline std::vector<double> log_uniform_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw domain_error("analysis", "bad log grid parameters");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    return g;
}

}  // namespace speclab
