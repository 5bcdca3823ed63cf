#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "speclab/constants.hpp"
#include "speclab/laurent.hpp"

using namespace speclab;
using Catch::Matchers::WithinAbs;

namespace {
ZetaEvaluator from_fn(std::function<double(double)> f) {
    return {[f = std::move(f)](double s, double) { return f(s); }, -1e9, true, "fn"};
}
}  // namespace

TEST_CASE("exact double pole", "[laurent]") {
    auto f = from_fn([](double s) { return 1.0 / ((s - 0.5) * (s - 0.5)); });
    auto ld = laurent_at_pole(f, 0.5, 2);
    CHECK_THAT(ld.A2, WithinAbs(1.0, 1e-12));
    CHECK_THAT(ld.A1, WithinAbs(0.0, 1e-8));
    CHECK(ld.order == 2);
}

TEST_CASE("divisor-model zeta: 4 zeta_R(2s)^2", "[laurent]") {
    auto f = from_fn([](double s) {
        const double z = riemann_zeta_real(2.0 * s, 1e-14);
        return 4.0 * z * z;
    });
    auto ld = laurent_at_pole(f, 0.5, 2);
    const double gamma = euler_gamma(1e-13).value;
    CHECK_THAT(ld.A2, WithinAbs(1.0, 1e-9));
    CHECK_THAT(ld.A1, WithinAbs(4.0 * gamma, 1e-7));
    CHECK(ld.error_estimates[0] < 1e-9);
}

TEST_CASE("riemann zeta at its pole: residue 1, finite part gamma", "[laurent]") {
    auto ld = laurent_at_pole(ZetaEvaluator::riemann(), 1.0, 1);
    CHECK_THAT(ld.A1, WithinAbs(1.0, 1e-10));
    CHECK_THAT(ld.finite_part, WithinAbs(euler_gamma(1e-13).value, 1e-7));
    CHECK(ld.A2 == 0.0);
}

TEST_CASE("lattice-normalized factor squared: A2 = 1, A1 = 4 gamma_c", "[laurent]") {
    for (double c : {1.0, 2.0, 5.0, 10.0}) {
        FactorDescriptor lat{c, 1, Weighting::uniform};
        auto f = ZetaEvaluator::product(ZetaEvaluator::factor(lat), ZetaEvaluator::factor(lat));
        auto ld = laurent_at_pole(f, 0.5, 2);
        const double gc = gamma_c(c, 1e-12).value;
        CHECK_THAT(ld.A2, WithinAbs(1.0, 1e-6));
        CHECK_THAT(ld.A1, WithinAbs(4.0 * gc, 1e-6));
        // product rule: A2 = res(left) res(right) = 1
        CHECK(ld.error_estimates[1] < 1e-6);
    }
}

TEST_CASE("finite part of the lattice factor is 2 gamma_c", "[laurent]") {
    for (double c : {1.0, 2.0, 5.0, 10.0}) {
        FactorDescriptor lat{c, 1, Weighting::uniform};
        auto ld = laurent_at_pole(ZetaEvaluator::factor(lat), 0.5, 1);
        CHECK_THAT(ld.A1, WithinAbs(1.0, 1e-9));
        CHECK_THAT(ld.finite_part, WithinAbs(2.0 * gamma_c(c, 1e-12).value, 1e-8));
    }
}

TEST_CASE("finite part of the spectral factor carries the boundary term", "[laurent]") {
    // with the true multiplicities (weight 1 on n=0) the finite part shifts
    // down by exactly c^{-1/2}
    for (double c : {1.0, 2.0, 5.0}) {
        FactorDescriptor circ{c, 1, Weighting::spectral};
        auto ld = laurent_at_pole(ZetaEvaluator::factor(circ), 0.5, 1);
        const double expected = 2.0 * gamma_c(c, 1e-12).value - 1.0 / std::sqrt(c);
        CHECK_THAT(ld.finite_part, WithinAbs(expected, 1e-8));
    }
}

TEST_CASE("residue invariance of the double pole across c", "[laurent]") {
    for (double c : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        FactorDescriptor circ{c, 1, Weighting::spectral};
        auto f = ZetaEvaluator::product(ZetaEvaluator::factor(circ),
                                        ZetaEvaluator::factor(circ));
        auto ld = laurent_at_pole(f, 0.5, 2);
        CHECK_THAT(ld.A2, WithinAbs(1.0, 1e-6));
    }
}

TEST_CASE("mismatched pole order is flagged", "[laurent]") {
    auto f = from_fn([](double s) { return 1.0 / ((s - 0.5) * (s - 0.5)); });
    CHECK_THROWS_AS(laurent_at_pole(f, 0.5, 1), domain_error);
    CHECK_THROWS_AS(laurent_at_pole(f, 0.5, 3), domain_error);
}
