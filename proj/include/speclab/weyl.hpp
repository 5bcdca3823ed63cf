#pragma once

// The Tauberian step: Laurent data at the first pole of a spectral zeta
// function mapped to the leading terms of the counting function,
//
//   N(lambda) ~ sum_{j=1}^{p} A_j/(j-1)! (d/ds)^{j-1} (lambda^s / s) |_{s=z0},
//
// plus closed-form coefficients for the model product operators.
//
// Sign conventions in the plain coefficient are fixed once against the exact
// shifted-divisor data: the pipeline zeta -> Laurent -> expansion must
// reproduce the lambda-coefficient 2 gamma_c - 1 of the pair count, and the
// test suite asserts exactly that.

#include <cmath>
#include <utility>

#include "speclab/constants.hpp"
#include "speclab/counting.hpp"
#include "speclab/errors.hpp"
#include "speclab/laurent.hpp"
#include "speclab/special.hpp"
#include "speclab/spectrum.hpp"
#include "speclab/zeta.hpp"

namespace speclab {

struct WeylExpansion {
    double z0 = 0.0;
    double coeff_log = 0.0;    // multiplies lambda^{z0} log(lambda)
    double coeff_plain = 0.0;  // multiplies lambda^{z0}
    double remainder_exponent_hint = 0.0;  // z0 - delta, informational

    double evaluate(double lambda) const {
        const double p = std::pow(lambda, z0);
        return coeff_log * p * std::log(lambda) + coeff_plain * p;
    }
};

// Exact algebra of the Tauberian map. For p = 2,
// (d/ds)(lambda^s/s) = lambda^s log(lambda)/s - lambda^s/s^2 at s = z0.
inline WeylExpansion aramaki_expansion(const LaurentData& ld, double z0) {
    if (ld.order != 1 && ld.order != 2)
        throw domain_error("weyl", "aramaki_expansion supports pole orders 1 and 2 only");
    if (ld.z0 != z0) throw domain_error("weyl", "LaurentData.z0 does not match z0");
    if (!(z0 > 0.0)) throw domain_error("weyl", "z0 must be positive");
    WeylExpansion w;
    w.z0 = z0;
    if (ld.order == 1) {
        w.coeff_log = 0.0;
        w.coeff_plain = ld.A1 / z0;
    } else {
        w.coeff_log = ld.A2 / z0;
        w.coeff_plain = ld.A1 / z0 - ld.A2 / (z0 * z0);
    }
    w.remainder_exponent_hint = z0 / 2.0;
    return w;
}

// (-Delta + c) (x) (-Delta + c) on the torus, pair-count normalization
// (every lattice pair weighted 4): N(lambda) ~ 2 sqrt(lambda) log(lambda) +
// (8 gamma_c - 4) sqrt(lambda), i.e. the divisor-table coefficients. The
// spectral normalization subtracts the boundary rows; see
// spectral_plain_correction below.
inline std::pair<double, double> equal_order_coefficients(double c, double tol = 1e-12) {
    const double gc = gamma_c(c, tol).value;
    return {2.0, 8.0 * gc - 4.0};
}

// True-multiplicity counting keeps weight 1 on the n=0 circle mode, which
// lowers the plain coefficient by 4/sqrt(c) relative to the pair count.
inline double spectral_plain_correction(double c) {
    if (!(c > 0.0)) throw domain_error("weyl", "correction defined for c > 0");
    return -4.0 / std::sqrt(c);
}

// Unequal ratios: N(lambda) ~ C lambda^{r} with r = max(n1/m1, n2/m2),
// realized as (leading Weyl coefficient of the dominant factor) times the
// partner's spectral zeta at r.
inline double unequal_order_coefficient(const ProductOperator& op, double tol = 1e-12) {
    op.validate();
    const double r1 = op.factor1.ratio(), r2 = op.factor2.ratio();
    if (r1 == r2)
        throw domain_error("weyl",
                           "equal factor ratios: use equal_order_coefficients / the double-pole path");
    const FactorDescriptor& dominant = (r1 > r2) ? op.factor1 : op.factor2;
    const FactorDescriptor& partner = (r1 > r2) ? op.factor2 : op.factor1;
    const double r = dominant.ratio();
    // every factor weighting in the family counts ~ 2 lambda^{1/(2k)} leading
    const double w_leading = 2.0;
    return w_leading * ZetaEvaluator::factor(partner)(r, tol);
}

// Same trace form with an explicit partner evaluator; covers degenerate
// partners such as a single eigenvalue.
inline double unequal_order_coefficient(double dominant_leading_coeff,
                                        const ZetaEvaluator& partner_zeta,
                                        double r, double tol = 1e-12) {
    return dominant_leading_coeff * partner_zeta(r, tol);
}

// Angular trace of a monomial symbol kappa |xi1|^{m1} |xi2|^{m2}:
//   vol_M vol(S^{n1-1}) vol(S^{n2-1}) kappa^{-l} log(kappa) / ((2 pi)^{n1+n2} m1 m2).
inline double tr_theta_monomial(double kappa, double l, double m1, double m2,
                                int n1, int n2, double vol_m) {
    if (!(kappa > 0.0)) throw domain_error("weyl", "kappa must be positive");
    auto sphere_vol = [](int n) {  // vol(S^{n-1}); S^0 = two points
        return 2.0 * std::pow(M_PI, n / 2.0) / gamma_fn(n / 2.0);
    };
    const double num = vol_m * sphere_vol(n1) * sphere_vol(n2) *
                       std::pow(kappa, -l) * std::log(kappa);
    return num / (std::pow(2.0 * M_PI, n1 + n2) * m1 * m2);
}

// Wodzicki residue of the bisingular calculus: m1 m2 times the double-pole
// coefficient.
inline double wodzicki_residue(const LaurentData& ld, double m1, double m2) {
    if (ld.order != 2)
        throw domain_error("weyl", "wodzicki_residue needs double-pole Laurent data");
    return m1 * m2 * ld.A2;
}

// predicted counting asymptotics of an operator, via its own zeta data
inline WeylExpansion operator_expansion(const ProductOperator& op) {
    if (op.pole_order() == 2) {
        const auto ld = laurent_at_pole(ZetaEvaluator::for_operator(op), op.z0(), 2);
        return aramaki_expansion(ld, op.z0());
    }
    WeylExpansion w;
    w.z0 = op.z0();
    w.coeff_log = 0.0;
    w.coeff_plain = unequal_order_coefficient(op);
    w.remainder_exponent_hint = op.z0() / 2.0;
    return w;
}

// exact counts against the predicted expansion on a lambda grid
inline CountingTable counting_table(const ProductOperator& op,
                                    const std::vector<double>& lambda_grid) {
    const WeylExpansion w = operator_expansion(op);
    CountingTable table;
    table.convention = CountConvention::multiplicity;
    table.operator_text = op.text();
    table.rows.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        CountingRow row;
        row.lambda = lam;
        row.exact_count = counting_function(op, lam);
        row.predicted = w.evaluate(lam);
        row.residual = static_cast<double>(row.exact_count) - row.predicted;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace speclab
