#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "speclab/iarith.hpp"

using namespace speclab;

TEST_CASE("isqrt exact on squares and off-by-one neighbours", "[iarith]") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(1) == 1);
    CHECK(isqrt_u64(3) == 1);
    CHECK(isqrt_u64(4) == 2);
    CHECK(isqrt_u64(99) == 9);
    for (u64 r : {u64(2), u64(3), u64(1000), u64(3037000499ULL), u64(4294967295ULL)}) {
        CHECK(isqrt_u64(r * r) == r);
        CHECK(isqrt_u64(r * r - 1) == r - 1);
        CHECK(isqrt_u64(r * r + 1) == r);
    }
    // the double seed alone would be wrong around here
    CHECK(isqrt_u64(u64(1) << 62) == (u64(1) << 31));
    CHECK(isqrt_u64((u64(1) << 62) - 1) == (u64(1) << 31) - 1);
}

TEST_CASE("isqrt randomized against the defining inequality", "[iarith]") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 20000; ++i) {
        u64 n = rng() >> (i % 32);
        u64 r = isqrt_u64(n);
        CHECK(u128(r) * r <= n);
        CHECK(u128(r + 1) * (r + 1) > n);
    }
}

TEST_CASE("iroot exact", "[iarith]") {
    CHECK(iroot_u64(0, 3) == 0);
    CHECK(iroot_u64(1, 5) == 1);
    CHECK(iroot_u64(26, 3) == 2);
    CHECK(iroot_u64(27, 3) == 3);
    CHECK(iroot_u64(28, 3) == 3);
    CHECK(iroot_u64(u64(10000019) * 10000019, 2) == 10000019);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 5);
        u64 n = rng() >> (rng() % 40);
        u64 r = iroot_u64(n, k);
        bool ov = false;
        CHECK(ipow_u128(r, k, ov) <= n);
        ov = false;
        u128 hi = ipow_u128(r + 1, k, ov);
        CHECK((ov || hi > n));
    }
}
