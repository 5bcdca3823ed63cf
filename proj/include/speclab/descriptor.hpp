#pragma once

// Descriptor grammar for the CLI:
//   factor  := ("circle" | "lattice") "(" "c=" real ["," "k=" int] ")"
//   product := factor ("⊗" | "x") factor
// "circle" carries the spectral multiplicities (weight 1 on the zero mode);
// "lattice" weights every index >= 0 by 2, the all-pairs-weight-4 convention
// of the divisor tables. c = 0 always drops the kernel.

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "speclab/errors.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

namespace detail {

inline void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

inline bool eat(std::string_view& s, std::string_view word) {
    skip_ws(s);
    if (s.substr(0, word.size()) == word) {
        s.remove_prefix(word.size());
        return true;
    }
    return false;
}

inline double parse_real(std::string_view& s, const std::string& what) {
    skip_ws(s);
    char* end = nullptr;
    const std::string buf(s.substr(0, 64));
    const double v = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str()) throw usage_error("descriptor: expected a number for " + what);
    s.remove_prefix(static_cast<std::size_t>(end - buf.c_str()));
    return v;
}

inline FactorDescriptor parse_factor(std::string_view& s) {
    FactorDescriptor d;
    if (eat(s, "circle"))
        d.weighting = Weighting::spectral;
    else if (eat(s, "lattice"))
        d.weighting = Weighting::uniform;
    else
        throw usage_error("descriptor: expected 'circle(...)' or 'lattice(...)'");
    if (!eat(s, "(")) throw usage_error("descriptor: expected '(' after the family name");
    if (!eat(s, "c=")) throw usage_error("descriptor: expected 'c=<real>'");
    d.c = parse_real(s, "c");
    if (eat(s, ",")) {
        if (!eat(s, "k=")) throw usage_error("descriptor: expected 'k=<int>' after ','");
        const double kv = parse_real(s, "k");
        if (kv < 1.0 || kv != std::floor(kv) || kv > 16.0)
            throw usage_error("descriptor: k must be an integer in [1, 16]");
        d.k = static_cast<unsigned>(kv);
    }
    if (!eat(s, ")")) throw usage_error("descriptor: expected ')'");
    try {
        d.validate();
    } catch (const domain_error& e) {
        throw usage_error(std::string("descriptor: ") + e.what());
    }
    return d;
}

}  // namespace detail

inline FactorDescriptor parse_factor_descriptor(std::string_view text) {
    std::string_view s = text;
    FactorDescriptor d = detail::parse_factor(s);
    detail::skip_ws(s);
    if (!s.empty()) throw usage_error("descriptor: trailing characters after factor");
    return d;
}

// Accepts both the tensor glyph and the ASCII fallback 'x'.
inline ProductOperator parse_product_descriptor(std::string_view text) {
    std::string_view s = text;
    ProductOperator op;
    op.factor1 = detail::parse_factor(s);
    if (!detail::eat(s, "⊗") && !detail::eat(s, "x"))
        throw usage_error("descriptor: expected '⊗' or 'x' between factors");
    op.factor2 = detail::parse_factor(s);
    detail::skip_ws(s);
    if (!s.empty()) throw usage_error("descriptor: trailing characters after product");
    return op;
}

// Either a bare factor or a product; a bare factor F parses as F (x) point
// spectrum is not meaningful here, so callers choose which parser to use.
inline bool looks_like_product(std::string_view text) {
    return text.find("⊗") != std::string_view::npos ||
           text.find(")x") != std::string_view::npos ||
           text.find(") x") != std::string_view::npos;
}

}  // namespace speclab
