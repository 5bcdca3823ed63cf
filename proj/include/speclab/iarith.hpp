#pragma once

// Exact integer arithmetic for lattice counting. Floating seeds are always
// followed by correction steps: at lambda ~ 1e12 a one-ULP error in a floored
// sqrt flips counts.

#include <cmath>
#include <cstdint>
#include <limits>

namespace speclab {

using u64  = std::uint64_t;
using i64  = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128_t;

// floor(sqrt(n))
inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    if (r > 0 && u128(r) * r > n) --r;
    while (u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// b^e, saturating at u128 max / flagging overflow past 2^127
inline u128 ipow_u128(u64 b, unsigned e, bool& overflow) {
    u128 r = 1;
    const u128 cap = ~u128(0);
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > cap / b) { overflow = true; return cap; }
        r *= b;
    }
    return r;
}

// floor(n^{1/k}), k >= 1
inline u64 iroot_u64(u64 n, unsigned k) {
    if (k == 0) return 0;
    if (k == 1 || n <= 1) return n;
    if (k == 2) return isqrt_u64(n);
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
    bool ov = false;
    while (r > 0 && ipow_u128(r, k, ov) > n) --r;
    for (;;) {
        ov = false;
        u128 p = ipow_u128(r + 1, k, ov);
        if (ov || p > n) break;
        ++r;
    }
    return r;
}

// a * b <= limit without overflow
inline bool mul_leq(u64 a, u64 b, u64 limit) {
    return u128(a) * b <= limit;
}

}  // namespace speclab
