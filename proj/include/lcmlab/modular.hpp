#pragma once

/**
 * @file modular.hpp
 * @brief Roots of f modulo p and p^k, and arithmetic-progression counts.
 *
 * Simple roots (f'(r) a unit mod p) lift uniquely by a Newton step. Roots
 * where f' vanishes mod p are lifted exhaustively: each of the p candidates
 * r + t*p^(k-1) is tested. All residues live in [0, p^k).
 */

#include "bigint.hpp"
#include "errors.hpp"
#include "fp_poly.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace lcmlab {

/// Primes up to this bound are root-scanned directly.
inline constexpr u64 kRootScanThreshold = 2048;

struct RootSet {
    u64 p = 0;
    unsigned k = 0;
    u64 modulus = 0;  // p^k
    std::vector<u64> roots;
    std::vector<bool> simple;  // f'(r) != 0 mod p, parallel to roots

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
};

namespace detail {

/// Coefficients of f reduced into [0, m).
inline std::vector<u64> residues(std::span<const Int> coeffs, u64 m) {
    std::vector<u64> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(mod_u64(c, m));
    return out;
}

inline u64 horner(const std::vector<u64>& c, u64 x, u64 m) {
    u64 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add_mod(mul_mod(acc, x, m), *it, m);
    return acc;
}

inline std::vector<u64> derivative_residues(std::span<const Int> coeffs, u64 m) {
    std::vector<u64> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(mod_u64(coeffs[i] * static_cast<unsigned long>(i), m));
    if (out.empty()) out.push_back(0);
    return out;
}

inline std::uint64_t splitting_seed(std::uint64_t seed, u64 p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace detail

/**
 * Level-1 roots: every r in [0, p) with p | f(r).
 *
 * p <= kRootScanThreshold scans all residues. Larger p takes
 * gcd(x^p - x, f mod p) and splits it with random shifts drawn from a
 * generator seeded by (seed, p); the result does not depend on the seed.
 */
inline RootSet roots_mod_p(const IntPoly& f, u64 p, std::uint64_t seed = 0) {
    RootSet out{p, 1, p, {}, {}};
    const auto fprime = detail::derivative_residues(f.coeffs(), p);
    fp::poly fbar = reduce_mod(f, p);
    if (p <= kRootScanThreshold || fbar.empty()) {
        const auto c = detail::residues(f.coeffs(), p);
        for (u64 r = 0; r < p; ++r) {
            if (detail::horner(c, r, p) == 0) out.roots.push_back(r);
        }
    } else if (fp::degree(fbar) >= 1) {
        std::mt19937_64 rng(detail::splitting_seed(seed, p));
        out.roots = fp::roots_by_splitting(fbar, p, rng);
    }
    for (u64 r : out.roots) out.simple.push_back(detail::horner(fprime, r, p) != 0);
    return out;
}

/**
 * Roots modulo p^k from the roots modulo p^(k-1).
 *
 * Throws cap_exceeded when p^k > cap, which callers use to end a lifting
 * loop. Moduli must fit in 63 bits.
 */
inline RootSet lift_roots(const IntPoly& f, const RootSet& prev, const Int& cap) {
    const u64 p = prev.p;
    if (prev.modulus > std::numeric_limits<u64>::max() / 2 / p) {
        throw std::overflow_error("lift_roots: modulus p^k exceeds 63 bits");
    }
    const u64 m = prev.modulus * p;
    if (from_u64(m) > cap) throw cap_exceeded("p^k exceeds cap");
    RootSet out{p, prev.k + 1, m, {}, {}};
    const auto c = detail::residues(f.coeffs(), m);
    const auto dc = detail::derivative_residues(f.coeffs(), m);
    for (std::size_t j = 0; j < prev.roots.size(); ++j) {
        const u64 r = prev.roots[j];
        if (prev.simple[j]) {
            const u64 fr = detail::horner(c, r, m);
            const u64 inv = inv_mod(detail::horner(dc, r, m), m);
            out.roots.push_back(sub_mod(r, mul_mod(fr, inv, m), m));
            out.simple.push_back(true);
        } else {
            for (u64 t = 0; t < p; ++t) {
                const u64 cand = r + t * prev.modulus;
                if (detail::horner(c, cand, m) == 0) {
                    out.roots.push_back(cand);
                    out.simple.push_back(false);
                }
            }
        }
    }
    // keep roots sorted with their flags
    std::vector<std::size_t> order(out.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.roots[a] < out.roots[b]; });
    RootSet sorted{p, out.k, m, {}, {}};
    for (auto i : order) {
        sorted.roots.push_back(out.roots[i]);
        sorted.simple.push_back(out.simple[i]);
    }
    return sorted;
}

/// #{n in [1, N] : n = r mod m}, for 0 <= r < m.
inline u64 count_progression(u64 r, u64 m, u64 N) {
    if (r == 0) return N / m;
    if (r > N) return 0;
    return (N - r) / m + 1;
}

}  // namespace lcmlab
