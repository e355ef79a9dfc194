#pragma once

/**
 * @file factor.hpp
 * @brief Primality certification and Brent-Pollard rho factorization.
 *
 * Inputs below 2^64 use deterministic Miller-Rabin; larger inputs use GMP's
 * mpz_probab_prime_p, which runs Baillie-PSW followed by random-base
 * Miller-Rabin rounds. Rho is Brent's cycle variant with batched gcds and a
 * bounded iteration budget per attempt.
 */

#include "bigint.hpp"
#include "errors.hpp"
#include "primes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace lcmlab {

struct rho_budget {
    std::uint64_t iterations_per_attempt = std::uint64_t{1} << 20;
    int attempts = 8;
};

using factorization = std::vector<std::pair<Int, unsigned>>;

inline bool is_probable_prime(const Int& n) {
    if (sgn(n) <= 0) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    // 24 reps = BPSW only; the extra 8 are random-base Miller-Rabin rounds
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace detail {

inline std::optional<u64> brent_rho_u64(u64 n, u64 c, u64 x0, std::uint64_t budget) {
    constexpr u64 kBatch = 128;
    u64 y = x0 % n, x = y, ys = y, q = 1, g = 1;
    auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
    std::uint64_t used = 0;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        for (u64 k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const u64 lim = std::min(kBatch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            used += lim;
        }
        if (used > budget) return std::nullopt;
    }
    if (g == n) {
        // batch overshot; replay one step at a time
        do {
            ys = step(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    if (g == n) return std::nullopt;
    return g;
}

inline std::optional<Int> brent_rho_big(const Int& n, const Int& c, const Int& x0, std::uint64_t budget) {
    constexpr std::uint64_t kBatch = 128;
    Int y = x0 % n, x = y, ys = y, q = 1, g = 1, diff;
    auto step = [&](Int& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    std::uint64_t used = 0;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const std::uint64_t lim = std::min(kBatch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                step(y);
                diff = abs(x - y);
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            used += lim;
        }
        if (used > budget) return std::nullopt;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd(Int(abs(x - ys)), n);
        } while (g == 1);
    }
    if (g == n) return std::nullopt;
    return g;
}

/// One nontrivial divisor of composite n, or factor_timeout.
inline Int split_composite(const Int& n, std::uint64_t seed, const rho_budget& budget) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < budget.attempts; ++attempt) {
        if (fits_u64(n)) {
            const u64 m = to_u64(n);
            const u64 c = 1 + rng() % (m - 1);
            const u64 x0 = rng() % m;
            if (auto g = brent_rho_u64(m, c, x0, budget.iterations_per_attempt)) return from_u64(*g);
        } else {
            Int c = from_u64(rng()) % (n - 1) + 1;
            Int x0 = from_u64(rng()) % n;
            if (auto g = brent_rho_big(n, c, x0, budget.iterations_per_attempt)) return *g;
        }
    }
    throw factor_timeout("rho exhausted " + std::to_string(budget.attempts) + " attempts on " + to_string(n));
}

/// Returns (root, k) with n = root^k and k maximal.
inline std::pair<Int, unsigned> perfect_power(const Int& n) {
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned k = static_cast<unsigned>(bits); k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) {
            auto inner = perfect_power(root);
            return {inner.first, inner.second * k};
        }
    }
    return {n, 1};
}

inline void factor_into(const Int& n, unsigned mult, std::uint64_t seed, const rho_budget& budget,
                        std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    auto [root, k] = perfect_power(n);
    if (k > 1) {
        factor_into(root, mult * k, seed + 1, budget, out);
        return;
    }
    Int a = split_composite(n, seed, budget);
    Int b = n / a;
    factor_into(a, mult, seed * 6364136223846793005ULL + 1, budget, out);
    factor_into(b, mult, seed * 6364136223846793005ULL + 3, budget, out);
}

}  // namespace detail

/**
 * Complete factorization of c > 1 into certified primes, ascending.
 *
 * Small primes (< 1000) are stripped by trial division first so the routine
 * is usable on arbitrary inputs; in the sieve pipeline every factor of c
 * already exceeds the sieve bound.
 */
inline factorization factor_cofactor(Int c, std::uint64_t seed = 0, const rho_budget& budget = {}) {
    if (c < 0) c = -c;
    if (c <= 1) throw precondition_unmet("factor_cofactor requires c > 1");
    std::map<Int, unsigned> acc;
    for (unsigned long p = 2; p < 1000; ++p) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(c.get_mpz_t(), p)) {
            const Int P(p);
            acc[P] += remove_factor(c, P);
        }
    }
    detail::factor_into(c, 1, seed, budget, acc);
    return {acc.begin(), acc.end()};
}

}  // namespace lcmlab
