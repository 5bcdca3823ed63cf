#pragma once

// Numerical Laurent data at the first pole of a zeta evaluator.
//
// g(s) = (s - z0)^p f(s) is analytic at z0; we sample it on the one-sided
// ladder s_k = z0 + h 2^{-k} and read off g(z0), g'(z0), g''(z0)/2 from a
// degree-(window-1) Newton interpolant through the smallest nodes. The same
// fit shifted one node up supplies per-coefficient error estimates, and a
// growing difference column flags a mis-declared pole order.

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/zeta.hpp"

namespace speclab {

struct LaurentData {
    double z0 = 0.0;
    int order = 1;            // p in {1, 2}
    double A2 = 0.0;          // res^2; zero for a simple pole
    double A1 = 0.0;          // residue
    double finite_part = 0.0; // constant term of the expansion
    std::array<double, 3> error_estimates{0.0, 0.0, 0.0};
};

struct ExtrapolationConfig {
    double h = 0.1;   // largest ladder offset
    int levels = 8;   // nodes at h * 2^{-k}, k = 0..levels
    int window = 7;   // nodes per fit -> degree window-1 polynomial
    double eval_tol = 1e-13;
};

namespace detail {

// Taylor coefficients (p(0), p'(0), p''(0)/2) of the Newton-form interpolant
// through (ts, gs), via order-2 truncated polynomial arithmetic.
struct Taylor2 {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
};

inline Taylor2 newton_taylor2(const std::vector<double>& ts, const std::vector<double>& gs) {
    const std::size_t n = ts.size();
    std::vector<double> dd(gs);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j]);
    // p(t) = dd0 + (t-t0)(dd1 + (t-t1)(dd2 + ...)); expand around t = 0
    double a = dd[n - 1], b = 0.0, c = 0.0;
    for (std::size_t jj = n - 1; jj-- > 0;) {
        const double tj = ts[jj];
        c = b - tj * c;
        b = a - tj * b;
        a = dd[jj] - tj * a;
    }
    return {a, b, c};
}

}  // namespace detail

// Laurent coefficients of f at z0 assuming pole order p, from the convergent
// (right) side. p = 1: A1 = g(z0), finite part = g'(z0). p = 2: A2 = g(z0),
// A1 = g'(z0), finite part = g''(z0)/2.
inline LaurentData laurent_at_pole(const ZetaEvaluator& f, double z0, int p,
                                   const ExtrapolationConfig& cfg = {}) {
    if (p != 1 && p != 2)
        throw domain_error("laurent", "pole order must be 1 or 2");
    if (cfg.window < 3 || cfg.levels + 1 < cfg.window)
        throw domain_error("laurent", "extrapolation window larger than the ladder");

    std::vector<double> ts(cfg.levels + 1), gs(cfg.levels + 1);
    for (int k = 0; k <= cfg.levels; ++k) {
        const double t = cfg.h * std::pow(2.0, -k);
        ts[k] = t;
        const double fs = f(z0 + t, cfg.eval_tol);
        gs[k] = (p == 1 ? t : t * t) * fs;
    }

    // window fits sliding toward the smallest nodes; their leading values must
    // settle, otherwise the declared pole order does not match f
    const int slots = cfg.levels + 2 - cfg.window;
    std::vector<detail::Taylor2> fits(slots);
    for (int w = 0; w < slots; ++w) {
        std::vector<double> tw(ts.begin() + w, ts.begin() + w + cfg.window);
        std::vector<double> gw(gs.begin() + w, gs.begin() + w + cfg.window);
        fits[w] = detail::newton_taylor2(tw, gw);
    }
    if (slots >= 3) {
        // toward smaller nodes a degree-(window-1) fit of an analytic g gains
        // ~2^window accuracy per shift; growing differences mean the declared
        // pole order does not match f
        std::vector<double> diff(slots - 1);
        for (int w = 0; w + 1 < slots; ++w)
            diff[w] = std::fabs(fits[w + 1].a0 - fits[w].a0);
        const double scale = std::max(1.0, std::fabs(fits[slots - 1].a0));
        if (diff.back() > std::max(1.5 * diff.front(), 1e-7 * scale)) {
            std::ostringstream os;
            os << "extrapolation not settling (pole order mismatch?); differences:";
            for (double d : diff) os << " " << d;
            throw domain_error("laurent", os.str());
        }
    }

    const detail::Taylor2 best = fits[slots - 1];
    const detail::Taylor2 prev = fits[slots >= 2 ? slots - 2 : 0];

    LaurentData ld;
    ld.z0 = z0;
    ld.order = p;
    ld.error_estimates = {std::fabs(best.a0 - prev.a0), std::fabs(best.a1 - prev.a1),
                          std::fabs(best.a2 - prev.a2)};
    if (p == 2) {
        ld.A2 = best.a0;
        ld.A1 = best.a1;
        ld.finite_part = best.a2;
    } else {
        ld.A2 = 0.0;
        ld.A1 = best.a0;
        ld.finite_part = best.a1;
    }
    return ld;
}

}  // namespace speclab
