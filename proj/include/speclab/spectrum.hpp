#pragma once

// One-dimensional model spectra and their tensor products.
//
// The factor family is the shifted circle Laplacian (-Delta + c)^k on S^1:
// eigenvalues (j^2 + c)^k with multiplicity 1 at j = 0 and 2 for j >= 1.
// c = 0 always drops the zero mode (counting is defined on the kernel
// complement). A second weighting puts multiplicity 2 on every j >= 0; that
// is the normalization in which each product eigenvalue carries weight 4,
// the convention of the divisor-count tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/iarith.hpp"

namespace speclab {

enum class Weighting {
    spectral,  // true multiplicities: 1 at j=0 (c>0), 2 for j>=1
    uniform,   // weight 2 on every j>=0; requires c > 0
};

struct FactorDescriptor {
    double c = 0.0;
    unsigned k = 1;
    Weighting weighting = Weighting::spectral;

    bool kernel_removed() const { return c == 0.0; }
    bool integral() const { return c >= 0.0 && std::floor(c) == c && c <= 9e15; }

    // operator order 2k on the 1-dimensional circle: convergence abscissa and
    // first pole of the factor zeta sit at s = 1/(2k)
    double order() const { return 2.0 * k; }
    int dim() const { return 1; }
    double ratio() const { return 1.0 / (2.0 * k); }

    double smallest_eigenvalue() const {
        return c > 0.0 ? std::pow(c, static_cast<double>(k)) : 1.0;
    }

    std::string text() const {
        std::ostringstream os;
        os << (weighting == Weighting::uniform ? "lattice" : "circle");
        os << "(c=" << c;
        if (k != 1) os << ",k=" << k;
        os << ")";
        return os.str();
    }

    void validate() const {
        if (c < 0.0) throw domain_error("spectra", "shift c must be nonnegative");
        if (k < 1) throw domain_error("spectra", "power k must be >= 1");
        if (weighting == Weighting::uniform && !(c > 0.0))
            throw domain_error("spectra", "uniform weighting needs c > 0 (zero mode has no finite weight)");
    }
};

struct Spectrum1D {
    std::vector<std::pair<double, std::uint64_t>> entries;  // (eigenvalue, multiplicity), ascending
    double cutoff = 0.0;   // largest eigenvalue materialized
    bool complete = false; // finite spectrum: no tail beyond `entries`
    FactorDescriptor descriptor;

    std::uint64_t total_multiplicity() const {
        std::uint64_t t = 0;
        for (const auto& e : entries) t += e.second;
        return t;
    }

    double smallest() const {
        if (entries.empty()) throw domain_error("spectra", "empty spectrum");
        return entries.front().first;
    }

    static Spectrum1D finite(std::vector<std::pair<double, std::uint64_t>> entries) {
        Spectrum1D s;
        s.entries = std::move(entries);
        std::sort(s.entries.begin(), s.entries.end());
        s.cutoff = s.entries.empty() ? 0.0 : s.entries.back().first;
        s.complete = true;
        return s;
    }
};

// All eigenvalues (j^2+c)^k <= cutoff with the descriptor's weighting.
inline Spectrum1D materialize(const FactorDescriptor& d, double cutoff) {
    d.validate();
    if (cutoff < d.smallest_eigenvalue()) {
        std::ostringstream os;
        os << "cutoff " << cutoff << " is below the smallest eigenvalue "
           << d.smallest_eigenvalue() << " of " << d.text();
        throw domain_error("spectra", os.str());
    }
    Spectrum1D s;
    s.descriptor = d;
    s.cutoff = cutoff;
    unsigned j = (d.c > 0.0) ? 0u : 1u;
    for (;; ++j) {
        double lam = std::pow(static_cast<double>(j) * j + d.c, static_cast<double>(d.k));
        if (lam > cutoff) break;
        std::uint64_t w = 2;
        if (j == 0 && d.weighting == Weighting::spectral) w = 1;
        s.entries.emplace_back(lam, w);
    }
    return s;
}

inline Spectrum1D circle_laplacian_spectrum(double c, unsigned k, double cutoff) {
    return materialize(FactorDescriptor{c, k, Weighting::spectral}, cutoff);
}

namespace detail {

inline bool all_integral(const Spectrum1D& s) {
    for (const auto& e : s.entries)
        if (std::floor(e.first) != e.first) return false;
    return true;
}

}  // namespace detail

// Products lambda_j * mu_i <= cutoff, multiplicities multiplied, coincident
// products merged. Merging is exact when both factors have integer spectra,
// otherwise relative tolerance 1e-12.
inline std::vector<std::pair<double, std::uint64_t>>
tensor_spectrum(const Spectrum1D& s1, const Spectrum1D& s2, double cutoff) {
    if (s1.entries.empty() || s2.entries.empty())
        throw domain_error("spectra", "tensor of an empty spectrum");
    double need1 = cutoff / s2.smallest();
    double need2 = cutoff / s1.smallest();
    if (!s1.complete && s1.cutoff < need1) {
        std::ostringstream os;
        os << "factor 1 materialized to " << s1.cutoff << " but the tensor cutoff "
           << cutoff << " requires >= " << need1;
        throw domain_error("spectra", os.str());
    }
    if (!s2.complete && s2.cutoff < need2) {
        std::ostringstream os;
        os << "factor 2 materialized to " << s2.cutoff << " but the tensor cutoff "
           << cutoff << " requires >= " << need2;
        throw domain_error("spectra", os.str());
    }

    std::vector<std::pair<double, std::uint64_t>> prod;
    for (const auto& [l1, w1] : s1.entries) {
        if (l1 > cutoff / s2.smallest()) break;
        for (const auto& [l2, w2] : s2.entries) {
            double p = l1 * l2;
            if (p > cutoff) break;
            prod.emplace_back(p, w1 * w2);
        }
    }
    std::sort(prod.begin(), prod.end());

    const bool exact = detail::all_integral(s1) && detail::all_integral(s2);
    std::vector<std::pair<double, std::uint64_t>> merged;
    for (const auto& [v, w] : prod) {
        bool same = !merged.empty() &&
                    (exact ? merged.back().first == v
                           : std::fabs(merged.back().first - v) <= 1e-12 * std::fabs(v));
        if (same)
            merged.back().second += w;
        else
            merged.emplace_back(v, w);
    }
    return merged;
}

// A = P1 (x) P2 with P_i from the circle family.
struct ProductOperator {
    FactorDescriptor factor1, factor2;

    double m1() const { return factor1.order(); }
    double m2() const { return factor2.order(); }
    int n1() const { return factor1.dim(); }
    int n2() const { return factor2.dim(); }

    bool kernel_removed() const { return factor1.kernel_removed() || factor2.kernel_removed(); }

    // first pole of the product zeta in s; order 2 iff the ratios coincide
    double z0() const { return std::max(factor1.ratio(), factor2.ratio()); }
    int pole_order() const { return factor1.ratio() == factor2.ratio() ? 2 : 1; }

    std::string text() const { return factor1.text() + "⊗" + factor2.text(); }

    void validate() const {
        factor1.validate();
        factor2.validate();
    }
};

}  // namespace speclab
