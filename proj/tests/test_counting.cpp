#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "speclab/counting.hpp"

using namespace speclab;

TEST_CASE("divisor sieve basics", "[counting]") {
    auto d = divisor_sieve(100);
    CHECK(d[1] == 1);
    CHECK(d[6] == 4);
    CHECK(d[97] == 2);
    CHECK(d[100] == 9);
    CHECK_THROWS_AS(divisor_sieve(1'000'000, /*budget_bytes=*/1024), domain_error);
}

TEST_CASE("divisor summatory equals sieve partial sums", "[counting]") {
    auto d = divisor_sieve(10000);
    std::uint64_t run = 0;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        run += d[n];
        REQUIRE(divisor_summatory(static_cast<double>(n)) == run);
    }
    CHECK(divisor_summatory(1.0) == 1);
    CHECK(divisor_summatory(10.0) == 27);
    CHECK(divisor_summatory(100.0) == 482);
    CHECK(divisor_summatory(10.7) == 27);  // floor semantics
}

TEST_CASE("divisor summatory guards", "[counting]") {
    CHECK_THROWS_AS(divisor_summatory(0.5), domain_error);
    CHECK_THROWS_AS(divisor_summatory(2e17), domain_error);
}

namespace {
std::uint64_t pair_count_brute(double c, double lam, IndexBase base) {
    const std::uint64_t start = base == IndexBase::from_zero ? 0 : 1;
    std::uint64_t total = 0;
    for (std::uint64_t n = start; (n * n + c) * (start * start + c) <= lam; ++n)
        for (std::uint64_t m = start; (n * n + c) * (m * m + c) <= lam; ++m) ++total;
    return total;
}
}  // namespace

TEST_CASE("shifted pair count small cases", "[counting]") {
    CHECK(shifted_pair_count(2.0, 3.9) == 0);  // smallest value is c^2 = 4
    CHECK(shifted_pair_count(2.0, 12.0) == 6);
    CHECK(shifted_pair_count(2.0, 12.0, IndexBase::from_one) == 1);
    CHECK(shifted_pair_count(2.0, 1e7) == 26747);  // frozen from the nested-loop oracle
    CHECK_THROWS_AS(shifted_pair_count(0.0, 10.0), domain_error);
    CHECK_THROWS_AS(shifted_pair_count(-1.0, 10.0), domain_error);
}

TEST_CASE("shifted pair count equals brute force, both bases", "[counting]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        const double c = 1.0 + static_cast<double>(rng() % 20);
        const double lam = 10.0 + static_cast<double>(rng() % 100000);
        CHECK(shifted_pair_count(c, lam) == pair_count_brute(c, lam, IndexBase::from_zero));
        CHECK(shifted_pair_count(c, lam, IndexBase::from_one) ==
              pair_count_brute(c, lam, IndexBase::from_one));
    }
    // non-integral shift goes through the long-double path
    for (int i = 0; i < 20; ++i) {
        const double c = 0.5 + 0.125 * static_cast<double>(rng() % 40);
        const double lam = 10.0 + static_cast<double>(rng() % 40000);
        CHECK(shifted_pair_count(c, lam) == pair_count_brute(c, lam, IndexBase::from_zero));
    }
}

TEST_CASE("counting function: examples", "[counting]") {
    ProductOperator ac{{2.0, 1}, {2.0, 1}};
    CHECK(counting_function(ac, 12.0) == 13);
    CHECK(counting_function(ac, 3.99) == 0);

    ProductOperator divisor_model{{0.0, 1}, {0.0, 1}};
    CHECK(counting_function(divisor_model, 100.0) == 108);  // 4 D(10)
}

TEST_CASE("counting function equals brute force", "[counting]") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        ProductOperator op{{static_cast<double>(rng() % 12), 1 + unsigned(rng() % 2)},
                           {static_cast<double>(rng() % 12), 1 + unsigned(rng() % 2)}};
        const double lam = 50.0 + static_cast<double>(rng() % 1000000);
        INFO(op.text() << " lambda=" << lam);
        CHECK(counting_function(op, lam) == brute_force_count(op, lam));
    }
    // non-integral shifts: long-double route, still exact agreement
    for (int i = 0; i < 12; ++i) {
        ProductOperator op{{0.5 + (rng() % 8) * 0.25, 1}, {0.5 + (rng() % 8) * 0.25, 1}};
        const double lam = 50.0 + static_cast<double>(rng() % 200000);
        INFO(op.text() << " lambda=" << lam);
        CHECK(counting_function(op, lam) == brute_force_count(op, lam));
    }
}

TEST_CASE("counting function: monotone and jump sizes on grid points", "[counting]") {
    ProductOperator ac{{2.0, 1}, {2.0, 1}};
    auto f = circle_laplacian_spectrum(2.0, 1, 400.0);
    auto tensor = tensor_spectrum(f, f, 400.0);
    std::uint64_t prev = 0;
    for (auto& [lam, mult] : tensor) {
        const auto at = counting_function(ac, lam);
        const auto before = counting_function(ac, lam - 0.5);
        CHECK(at == before + mult);  // right-continuous jump of size mult
        CHECK(at >= prev);
        prev = at;
    }
}

TEST_CASE("materialized-spectra counting agrees with closed form", "[counting]") {
    ProductOperator op{{3.0, 1}, {1.0, 2}};
    const double lam = 5000.0;
    auto s1 = materialize(op.factor1, lam);
    auto s2 = materialize(op.factor2, lam);
    CHECK(counting_function(s1, s2, lam) == counting_function(op, lam));
    CHECK_THROWS_AS(counting_function(s1, materialize(op.factor2, 10.0), lam), domain_error);
}

TEST_CASE("brute force oracle guard", "[counting]") {
    ProductOperator ac{{2.0, 1}, {2.0, 1}};
    CHECK_THROWS_AS(brute_force_count(ac, 2e8), domain_error);
}

TEST_CASE("pair count vs multiplicity count boundary bracket", "[counting]") {
    // 0 <= 4 D_c(lambda^2) - N(lambda^2) <= 4 (2 sqrt(lambda^2/c - c) + 1):
    // boundary rows carry weight 2 or 1 instead of 4.
    ProductOperator ac{{2.0, 1}, {2.0, 1}};
    for (double lam : {20.0, 100.0, 450.0}) {
        const double mu = lam * lam;
        const auto pairs = shifted_pair_count(2.0, mu);
        const auto n = counting_function(ac, mu);
        const auto gap = 4 * pairs - n;
        CHECK(4 * pairs >= n);
        const auto edge = static_cast<std::uint64_t>(std::sqrt(mu / 2.0 - 2.0));
        CHECK(gap <= 4 * (2 * edge + 1));
    }
}
