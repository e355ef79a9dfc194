#pragma once

/**
 * @file primes.hpp
 * @brief Prime enumeration and 64-bit modular arithmetic.
 *
 * Eratosthenes over odd numbers only, one bit per candidate. Bounds above
 * kSegmentThreshold are sieved in fixed-size segments so memory stays at
 * O(sqrt(limit)) plus one segment.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace lcmlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
inline u64 inv_mod(u64 a, u64 m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

/// Deterministic Miller-Rabin for all 64-bit inputs (Sinclair's seven bases).
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        a %= n;
        if (a == 0) continue;
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline constexpr u64 kSegmentThreshold = 100'000'000;

namespace detail {

/// Bit i of the table stands for the odd number 2i+1.
inline std::vector<u64> odd_sieve_bits(u64 limit) {
    const u64 n_odd = limit / 2 + 1;
    std::vector<u64> composite((n_odd + 63) / 64, 0);
    composite[0] |= 1;  // 1 is not prime
    for (u64 i = 1;; ++i) {
        const u64 p = 2 * i + 1;
        if (p * p > limit) break;
        if (composite[i / 64] >> (i % 64) & 1) continue;
        for (u64 j = p * p / 2; j < n_odd; j += p) composite[j / 64] |= 1ULL << (j % 64);
    }
    return composite;
}

inline void collect_odd(const std::vector<u64>& composite, u64 base, u64 lo, u64 hi, std::vector<u64>& out) {
    // bit i stands for base + 2i
    for (std::size_t w = 0; w < composite.size(); ++w) {
        u64 bits = ~composite[w];
        while (bits) {
            const int b = __builtin_ctzll(bits);
            bits &= bits - 1;
            const u64 v = base + 2 * (w * 64 + static_cast<u64>(b));
            if (v > hi) return;
            if (v >= lo) out.push_back(v);
        }
    }
}

}  // namespace detail

/// All primes p with p <= limit, ascending.
inline std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    out.push_back(2);
    if (limit <= kSegmentThreshold) {
        detail::collect_odd(detail::odd_sieve_bits(limit), 1, 3, limit, out);
        return out;
    }
    const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<u64> base;
    detail::collect_odd(detail::odd_sieve_bits(root), 1, 3, root, base);
    constexpr u64 kSpan = u64{1} << 24;  // odd candidates per segment
    for (u64 lo = 3; lo <= limit; lo += 2 * kSpan) {
        const u64 hi = std::min(limit, lo + 2 * kSpan - 1);
        const u64 n_odd = (hi - lo) / 2 + 1;
        std::vector<u64> composite((n_odd + 63) / 64, 0);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (u64 m = start; m <= hi; m += 2 * p) {
                const u64 j = (m - lo) / 2;
                composite[j / 64] |= 1ULL << (j % 64);
            }
        }
        detail::collect_odd(composite, lo, lo, hi, out);
    }
    return out;
}

}  // namespace lcmlab
