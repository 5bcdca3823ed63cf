#pragma once

// Spectral zeta functions. Public evaluation uses s = -z, so every sum reads
// sum lambda_j^{-s} and the classical Riemann pole sits at s = 1.
//
// The shifted one-dimensional sum Z_c(s) = sum_{n in Z} (n^2+c)^{-s} is
// continued across its abscissa by Poisson summation:
//
//   Z_c(s) = sqrt(pi) Gamma(s-1/2)/Gamma(s) c^{1/2-s}
//          + (4 pi^s / Gamma(s)) c^{(1-2s)/4}
//            sum_{n>=1} n^{s-1/2} K_{s-1/2}(2 pi n sqrt(c)),
//
// an exponentially convergent series valid on the real line away from the
// Gamma poles. Near s = 1/2 the first term is evaluated through
// Gamma(s+1/2) / ((s-1/2) Gamma(s)) to keep all Gamma arguments >= 1/2.

#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "speclab/constants.hpp"
#include "speclab/errors.hpp"
#include "speclab/special.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

// Riemann zeta for real s > 1, Euler-Maclaurin with Bernoulli corrections
// through order 6; the cut point grows until the first omitted term is below
// tol. The N^{1-s}/(s-1) term carries the pole analytically, so evaluation
// stays accurate arbitrarily close to the domain edge.
inline double riemann_zeta_real(double s, double tol = 1e-13) {
    if (!(s > 1.0 + 1e-6))
        throw domain_error("zeta",
                           "riemann_zeta_real needs s > 1 + 1e-6; pole behavior is LaurentData territory");
    double n = 16.0;
    while (true) {
        double poch = 1.0;
        for (int j = 0; j < 7; ++j) poch *= (s + j);
        // first omitted term: B_8/8! * (s)_7 * N^{-s-7}
        if (poch / 30.0 / 40320.0 * std::pow(n, -(s + 7.0)) <= tol || n >= 65536.0) break;
        n *= 2.0;
    }
    const auto ni = static_cast<std::uint64_t>(n);
    detail::KahanSum acc;
    for (std::uint64_t i = ni - 1; i >= 1; --i) acc.add(std::pow(static_cast<double>(i), -s));
    double v = acc.sum + std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
    v += s / 12.0 * std::pow(n, -s - 1.0);
    v -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(n, -s - 3.0);
    v += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 * std::pow(n, -s - 5.0);
    return v;
}

// Z_c(s), meromorphic continuation per the header formula. Poles where
// Gamma(s-1/2) has them and 1/Gamma(s) does not cancel: s = 1/2 only, for
// s on the real line right of -1/2 + eps; we guard every Gamma pole anyway.
inline double epstein_shifted(double c, double s, double tol = 1e-13) {
    if (!(c > 0.0)) throw domain_error("zeta", "epstein_shifted requires c > 0");
    const double nu = s - 0.5;
    double nearest = std::round(nu);
    if (nearest <= 0.0 && std::fabs(nu - nearest) < 1e-6) {
        std::ostringstream os;
        os << "s = " << s << " is within 1e-6 of a pole of the continuation";
        throw domain_error("zeta", os.str());
    }

    double gamma_term;
    if (nu < 1.0) {
        // Gamma(s-1/2) = Gamma(s+1/2)/(s-1/2); arguments stay >= 1/2
        gamma_term = std::sqrt(M_PI) * std::pow(c, -nu) * gamma_fn(s + 0.5) /
                     (nu * gamma_fn(s));
    } else {
        gamma_term = std::sqrt(M_PI) * std::pow(c, -nu) * gamma_fn(nu) / gamma_fn(s);
    }

    const double x0 = 2.0 * M_PI * std::sqrt(c);
    const double prefactor = 4.0 * std::pow(M_PI, s) / gamma_fn(s) *
                             std::pow(c, (1.0 - 2.0 * s) / 4.0);
    double acc = 0.0;
    for (int n = 1; n <= 512; ++n) {
        const double term = std::pow(static_cast<double>(n), nu) * bessel_k(nu, n * x0);
        acc += term;
        if (std::fabs(prefactor * term) < tol / 10.0) break;
    }
    return gamma_term + prefactor * acc;
}

// Truncated sum over a materialized spectrum with an integral-comparison tail
// bound taken from the descriptor's growth exponent. `complete` spectra have
// no tail.
inline double spectral_zeta_direct(const Spectrum1D& spec, double s, double tol = 1e-12) {
    if (spec.entries.empty()) throw domain_error("zeta", "empty spectrum");
    detail::KahanSum acc;
    for (auto it = spec.entries.rbegin(); it != spec.entries.rend(); ++it)
        acc.add(static_cast<double>(it->second) * std::pow(it->first, -s));
    if (spec.complete) return acc.sum;

    const FactorDescriptor& d = spec.descriptor;
    const double expo = 2.0 * d.k * s;  // eigenvalues grow like j^{2k}
    if (expo <= 1.0 + 1e-9) {
        std::ostringstream os;
        os << "s = " << s << " is inside the convergence margin of " << d.text()
           << " (abscissa " << d.ratio() << "); materialized sums cannot meet the tolerance";
        throw domain_error("zeta", os.str());
    }
    // indices beyond the cutoff start at J ~ cutoff^{1/(2k)}
    const double j_max = std::floor(std::pow(spec.cutoff, 1.0 / (2.0 * d.k)));
    const double tail = 2.0 * std::pow(j_max, 1.0 - expo) / (expo - 1.0);
    if (tail > tol) {
        std::ostringstream os;
        os << "tail bound " << tail << " exceeds tol " << tol
           << "; materialize " << d.text() << " beyond cutoff " << spec.cutoff;
        throw domain_error("zeta", os.str());
    }
    return acc.sum;
}

// Convenience: materialize a factor to whatever cutoff meets tol, then sum.
inline double spectral_zeta_direct(const FactorDescriptor& d, double s, double tol = 1e-12) {
    d.validate();
    const double expo = 2.0 * d.k * s;
    if (expo <= 1.0 + 1e-6)
        throw domain_error("zeta", "s inside the convergence margin; no finite cutoff suffices");
    double j_need = std::pow(2.0 / (tol * (expo - 1.0)), 1.0 / (expo - 1.0)) + 2.0;
    if (j_need > 2e8)
        throw domain_error("zeta", "required cutoff too large; move s away from the margin");
    if (j_need < 4.0) j_need = 4.0;
    const double cutoff = std::pow(j_need * j_need + d.c, static_cast<double>(d.k));
    return spectral_zeta_direct(materialize(d, cutoff), s, tol);
}

// A real-line zeta evaluator with its valid region. `abscissa` is the first
// pole in s; continued evaluators are usable on both sides of it.
class ZetaEvaluator {
public:
    using Fn = std::function<double(double, double)>;

    ZetaEvaluator() = default;
    ZetaEvaluator(Fn fn, double abscissa, bool continued, std::string name)
        : fn_(std::move(fn)), abscissa_(abscissa), continued_(continued),
          name_(std::move(name)) {}

    double operator()(double s, double tol = 1e-12) const {
        if (!fn_) throw domain_error("zeta", "empty evaluator");
        if (!continued_ && s <= abscissa_ + 1e-9) {
            std::ostringstream os;
            os << name_ << " is only summable for s > " << abscissa_
               << "; requested s = " << s;
            throw domain_error("zeta", os.str());
        }
        return fn_(s, tol);
    }

    double abscissa() const { return abscissa_; }
    bool continued() const { return continued_; }
    const std::string& name() const { return name_; }

    static ZetaEvaluator riemann() {
        return {[](double s, double tol) { return riemann_zeta_real(s, tol); },
                1.0, false, "zeta_R"};
    }

    static ZetaEvaluator constant(double value) {
        return {[value](double, double) { return value; }, -1e9, true, "const"};
    }

    // zeta of one circle-family factor; continued across the abscissa
    static ZetaEvaluator factor(const FactorDescriptor& d) {
        d.validate();
        const double a = d.ratio();
        if (d.c == 0.0) {
            const unsigned k = d.k;
            return {[k](double s, double tol) { return 2.0 * riemann_zeta_real(2.0 * k * s, tol); },
                    a, false, d.text()};
        }
        const double c = d.c;
        const unsigned k = d.k;
        if (d.weighting == Weighting::uniform) {
            return {[c, k](double s, double tol) {
                        return epstein_shifted(c, k * s, tol) + std::pow(c, -static_cast<double>(k) * s);
                    },
                    a, true, d.text()};
        }
        return {[c, k](double s, double tol) { return epstein_shifted(c, k * s, tol); },
                a, true, d.text()};
    }

    static ZetaEvaluator direct(Spectrum1D spec) {
        const double a = spec.complete ? -1e9 : spec.descriptor.ratio();
        auto holder = std::make_shared<Spectrum1D>(std::move(spec));
        std::string name = holder->complete ? "direct" : "direct:" + holder->descriptor.text();
        return {[holder](double s, double tol) { return spectral_zeta_direct(*holder, s, tol); },
                a, false, std::move(name)};
    }

    static ZetaEvaluator product(const ZetaEvaluator& l, const ZetaEvaluator& r) {
        auto lf = l, rf = r;
        return {[lf, rf](double s, double tol) { return lf(s, tol / 2) * rf(s, tol / 2); },
                std::max(l.abscissa(), r.abscissa()),
                l.continued() && r.continued(),
                l.name() + "*" + r.name()};
    }

    // product zeta of A = P1 (x) P2: zeta_A(s) = zeta_{P1}(s) zeta_{P2}(s)
    static ZetaEvaluator for_operator(const ProductOperator& op) {
        return product(factor(op.factor1), factor(op.factor2));
    }

private:
    Fn fn_;
    double abscissa_ = 0.0;
    bool continued_ = false;
    std::string name_;
};

// Pointwise product rule; each factor enforces its own region.
inline double product_zeta(const ZetaEvaluator& left, const ZetaEvaluator& right,
                           double s, double tol = 1e-12) {
    return left(s, tol / 2) * right(s, tol / 2);
}

// Box-truncated double sum sum_{i,j} w_i w_j (lambda_j mu_i)^{-s}, with the
// cross tail bounded by tail1 * zeta2 + zeta1 * tail2. This walks the pairs
// one by one, so it is an independent route against the product rule.
inline double tensor_zeta_direct(const FactorDescriptor& d1, const FactorDescriptor& d2,
                                 double s, double tol = 1e-12) {
    const double z1 = std::fabs(spectral_zeta_direct(d1, s, 1e-6));
    const double z2 = std::fabs(spectral_zeta_direct(d2, s, 1e-6));
    auto box_factor = [&](const FactorDescriptor& d, double other_mag) {
        const double expo = 2.0 * d.k * s;
        if (expo <= 1.0 + 1e-6)
            throw domain_error("zeta", "s inside the convergence margin of a tensor factor");
        const double per_tail = tol / (4.0 * (other_mag + 1.0));
        double j = std::pow(2.0 / (per_tail * (expo - 1.0)), 1.0 / (expo - 1.0)) + 2.0;
        if (j < 4.0) j = 4.0;
        if (j > 2e6) throw domain_error("zeta", "tensor direct sum would need too many terms");
        return materialize(d, std::pow(j * j + d.c, static_cast<double>(d.k)));
    };
    const Spectrum1D s1 = box_factor(d1, z2);
    const Spectrum1D s2 = box_factor(d2, z1);
    detail::KahanSum acc;
    for (const auto& [l1, w1] : s1.entries)
        for (const auto& [l2, w2] : s2.entries)
            acc.add(static_cast<double>(w1 * w2) * std::pow(l1 * l2, -s));
    return acc.sum;
}

}  // namespace speclab
