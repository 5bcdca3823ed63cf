#pragma once

// Exact counting functions: divisor sieve, hyperbola-method summatory
// function, shifted pair counts D_c, and multiplicity-weighted N(lambda) for
// product spectra.
//
// Integer inputs take pure integer paths (u64/u128 with corrected integer
// roots). Non-integral shifts fall back to long double, where the closed-form
// seeds are always corrected against the same comparison predicate the brute
// force uses, so the two routes agree exactly on every instance.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/iarith.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

enum class IndexBase { from_zero, from_one };
enum class CountConvention { multiplicity, pair_count };

struct CountingRow {
    double lambda = 0.0;
    std::uint64_t exact_count = 0;
    double predicted = 0.0;
    double residual = 0.0;  // exact - predicted
};

struct CountingTable {
    std::vector<CountingRow> rows;
    CountConvention convention = CountConvention::multiplicity;
    std::string operator_text;
};

// d(h) for all h <= n. Memory budget is explicit; refuse rather than swap.
inline std::vector<std::uint32_t> divisor_sieve(std::uint64_t n,
                                                std::uint64_t budget_bytes = std::uint64_t(1) << 30) {
    if (n < 1) throw domain_error("counting", "sieve needs n >= 1");
    if ((n + 1) * sizeof(std::uint32_t) > budget_bytes) {
        std::ostringstream os;
        os << "sieve of size " << n << " exceeds the memory budget of "
           << budget_bytes << " bytes";
        throw domain_error("counting", os.str());
    }
    std::vector<std::uint32_t> d(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; j += i) ++d[j];
    return d;
}

// D(x) = sum_{n<=x} d(n) = 2 sum_{n<=sqrt(x)} floor(x/n) - floor(sqrt(x))^2,
// O(sqrt x) divisions.
inline std::uint64_t divisor_summatory(double lambda) {
    if (!(lambda >= 1.0)) throw domain_error("counting", "divisor_summatory needs lambda >= 1");
    if (lambda > 1e17)
        throw domain_error("counting", "divisor_summatory overflow guard: lambda > 1e17 would overflow 64-bit sums");
    const u64 x = static_cast<u64>(lambda);
    const u64 r = isqrt_u64(x);
    u64 s = 0;
    for (u64 n = 1; n <= r; ++n) s += x / n;
    return 2 * s - r * r;
}

// D_c(lambda) = #{(n,m) : (n^2+c)(m^2+c) <= lambda}, indices from 0 or 1.
// Outer loop over n with a closed-form inner count, O(sqrt(lambda)) total.
inline std::uint64_t shifted_pair_count(double c, double lambda,
                                        IndexBase base = IndexBase::from_zero) {
    if (!(c > 0.0)) throw domain_error("counting", "shifted_pair_count requires c > 0");
    if (!(lambda > 0.0)) throw domain_error("counting", "lambda must be positive");
    if (lambda >= 9.2e18)
        throw domain_error("counting", "shifted_pair_count overflow guard: lambda >= 9.2e18");

    const u64 n0 = (base == IndexBase::from_zero) ? 0 : 1;

    if (std::floor(c) == c && c <= 9e15) {
        const u64 ci = static_cast<u64>(c);
        const u64 lam = static_cast<u64>(lambda);
        const u64 mmin = n0 * n0 + ci;  // smallest admissible factor value
        u64 total = 0;
        for (u64 n = n0;; ++n) {
            const u128 row = u128(n * n + ci);
            if (row * mmin > lam) break;
            const u64 q = lam / (n * n + ci);
            if (q < ci) continue;
            const u64 mmax = isqrt_u64(q - ci);
            total += (base == IndexBase::from_zero) ? mmax + 1 : mmax;
        }
        return total;
    }

    // non-integral shift: long double with predicate-corrected floors
    const long double lamL = static_cast<long double>(lambda);
    const long double cL = static_cast<long double>(c);
    auto inside = [&](u64 n, u64 m) {
        return (static_cast<long double>(n) * n + cL) *
                   (static_cast<long double>(m) * m + cL) <= lamL;
    };
    u64 total = 0;
    for (u64 n = n0; inside(n, n0); ++n) {
        long double t = lamL / (static_cast<long double>(n) * n + cL) - cL;
        if (t < 0) continue;
        u64 m = static_cast<u64>(std::sqrt(static_cast<double>(t)));
        while (inside(n, m + 1)) ++m;
        while (m > 0 && !inside(n, m)) --m;
        if (!inside(n, std::max(m, n0))) continue;
        total += (base == IndexBase::from_zero) ? m + 1 : m;
    }
    return total;
}

namespace detail {

// weighted count of factor eigenvalues (m^2+c)^k <= Q, integer path
inline u64 factor_count_u64(const FactorDescriptor& f, u64 q) {
    if (f.c == 0.0) {
        // kernel removed: values m^{2k}, m >= 1, weight 2
        return 2 * iroot_u64(q, 2 * f.k);
    }
    const u64 ci = static_cast<u64>(f.c);
    const u64 t = iroot_u64(q, f.k);
    if (t < ci) return 0;
    const u64 m = isqrt_u64(t - ci);
    return (f.weighting == Weighting::uniform) ? 2 * (m + 1) : 2 * m + 1;
}

// same in long double against an explicit row predicate
template <class Inside>
inline u64 factor_count_ld(const FactorDescriptor& f, long double budget, Inside inside) {
    const long double c = static_cast<long double>(f.c);
    const u64 m0 = (f.c == 0.0) ? 1 : 0;
    long double t = std::pow(static_cast<double>(budget), 1.0 / f.k) - c;
    u64 m = (t >= 0) ? static_cast<u64>(std::sqrt(static_cast<double>(t))) : 0;
    while (inside(m + 1)) ++m;
    while (m > m0 && !inside(m)) --m;
    if (!inside(m)) return 0;
    if (f.c == 0.0) return 2 * m;
    return (f.weighting == Weighting::uniform) ? 2 * (m + 1) : 2 * m + 1;
}

inline long double eig_ld(const FactorDescriptor& f, u64 j) {
    return std::pow(static_cast<long double>(j) * j + static_cast<long double>(f.c),
                    static_cast<long double>(f.k));
}

inline bool integral_inputs(const ProductOperator& op, double lambda) {
    return op.factor1.integral() && op.factor2.integral() && lambda < 9.2e18;
}

}  // namespace detail

// N(lambda): eigenvalues of P1 (x) P2 up to lambda, counted with weight.
// The factor with the larger power runs the outer loop, so the work is
// O(lambda^{1/(2 max k)}) closed-form inner counts.
inline std::uint64_t counting_function(const ProductOperator& op, double lambda) {
    op.validate();
    if (!(lambda > 0.0)) throw domain_error("counting", "lambda must be positive");

    const bool swap = op.factor2.k > op.factor1.k;
    const FactorDescriptor& fo = swap ? op.factor2 : op.factor1;  // outer
    const FactorDescriptor& fi = swap ? op.factor1 : op.factor2;  // inner

    const u64 j0 = (fo.c == 0.0) ? 1 : 0;

    if (detail::integral_inputs(op, lambda)) {
        const u64 lam = static_cast<u64>(lambda);
        bool ov = false;
        const u128 mu_min = (fi.c > 0.0)
                                ? ipow_u128(static_cast<u64>(fi.c), fi.k, ov)
                                : 1;
        if (ov) return 0;
        u64 total = 0;
        for (u64 j = j0;; ++j) {
            bool ovj = false;
            const u128 ej = ipow_u128(j * j + static_cast<u64>(fo.c), fo.k, ovj);
            if (ovj || ej > lam || ej * mu_min > lam) break;
            const u64 w = (j == 0 && fo.weighting == Weighting::spectral) ? 1 : 2;
            total += w * detail::factor_count_u64(fi, lam / static_cast<u64>(ej));
        }
        return total;
    }

    const long double lamL = static_cast<long double>(lambda);
    const long double mu_min = detail::eig_ld(fi, (fi.c == 0.0) ? 1 : 0);
    u64 total = 0;
    for (u64 j = j0;; ++j) {
        const long double ej = detail::eig_ld(fo, j);
        if (ej * mu_min > lamL) break;
        const u64 w = (j == 0 && fo.weighting == Weighting::spectral) ? 1 : 2;
        auto inside = [&](u64 m) { return ej * detail::eig_ld(fi, m) <= lamL; };
        total += w * detail::factor_count_ld(fi, static_cast<double>(lamL / ej), inside);
    }
    return total;
}

// Materialized-spectra route: factor-1 scan against cumulative multiplicities
// of factor 2 (binary search). Works for arbitrary Spectrum1D inputs.
inline std::uint64_t counting_function(const Spectrum1D& s1, const Spectrum1D& s2,
                                       double lambda) {
    if (s1.entries.empty() || s2.entries.empty()) return 0;
    const double mu1 = s1.smallest(), mu2 = s2.smallest();
    if (lambda < mu1 * mu2) return 0;
    if (!s1.complete && s1.cutoff < lambda / mu2) {
        std::ostringstream os;
        os << "factor 1 cutoff " << s1.cutoff << " insufficient; need >= " << lambda / mu2;
        throw domain_error("counting", os.str());
    }
    if (!s2.complete && s2.cutoff < lambda / mu1) {
        std::ostringstream os;
        os << "factor 2 cutoff " << s2.cutoff << " insufficient; need >= " << lambda / mu1;
        throw domain_error("counting", os.str());
    }
    std::vector<double> vals;
    std::vector<std::uint64_t> cum;
    vals.reserve(s2.entries.size());
    cum.reserve(s2.entries.size());
    std::uint64_t run = 0;
    for (const auto& [v, w] : s2.entries) {
        run += w;
        vals.push_back(v);
        cum.push_back(run);
    }
    std::uint64_t total = 0;
    for (const auto& [l1, w1] : s1.entries) {
        if (l1 > lambda / mu2) break;
        const double budget = lambda / l1;
        auto it = std::upper_bound(vals.begin(), vals.end(), budget);
        if (it == vals.begin()) continue;
        total += w1 * cum[static_cast<std::size_t>(it - vals.begin()) - 1];
    }
    return total;
}

// Nested-loop oracle. Shares the comparison predicate with counting_function,
// so equality is exact, not approximate.
inline std::uint64_t brute_force_count(const ProductOperator& op, double lambda) {
    op.validate();
    if (!(lambda > 0.0)) throw domain_error("counting", "lambda must be positive");
    if (lambda > 1e8)
        throw domain_error("counting", "brute_force_count oracle guard: lambda > 1e8");

    const FactorDescriptor& f1 = op.factor1;
    const FactorDescriptor& f2 = op.factor2;
    const u64 n0 = (f1.c == 0.0) ? 1 : 0;
    const u64 m0 = (f2.c == 0.0) ? 1 : 0;

    u64 total = 0;
    if (detail::integral_inputs(op, lambda)) {
        const u64 lam = static_cast<u64>(lambda);
        for (u64 n = n0;; ++n) {
            bool ovn = false;
            const u128 e1 = ipow_u128(n * n + static_cast<u64>(f1.c), f1.k, ovn);
            bool ovm = false;
            const u128 e2min = ipow_u128(m0 * m0 + static_cast<u64>(f2.c), f2.k, ovm);
            if (ovn || ovm || e1 * e2min > lam) break;
            const u64 wn = (n == 0 && f1.weighting == Weighting::spectral) ? 1 : 2;
            for (u64 m = m0;; ++m) {
                bool ov = false;
                const u128 e2 = ipow_u128(m * m + static_cast<u64>(f2.c), f2.k, ov);
                if (ov || e1 * e2 > lam) break;
                const u64 wm = (m == 0 && f2.weighting == Weighting::spectral) ? 1 : 2;
                total += wn * wm;
            }
        }
        return total;
    }

    const long double lamL = static_cast<long double>(lambda);
    for (u64 n = n0;; ++n) {
        if (detail::eig_ld(f1, n) * detail::eig_ld(f2, m0) > lamL) break;
        const u64 wn = (n == 0 && f1.weighting == Weighting::spectral) ? 1 : 2;
        for (u64 m = m0;; ++m) {
            if (detail::eig_ld(f1, n) * detail::eig_ld(f2, m) > lamL) break;
            const u64 wm = (m == 0 && f2.weighting == Weighting::spectral) ? 1 : 2;
            total += wn * wm;
        }
    }
    return total;
}

}  // namespace speclab
