#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for small N.
 *
 * Factors every |f(n)| on its own: a private prime table, trial division up
 * to 10^6, GMP primality and a Floyd-cycle rho for anything left. The lcm is
 * a running gcd-based lcm. None of this touches the sieve, the root lifting,
 * or the pipeline's factorizer.
 */

#include "bigint.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace lcmlab::oracle {

inline constexpr std::uint64_t kMaxN = 10'000;
inline constexpr std::uint64_t kTrialLimit = 1'000'000;

struct OracleResult {
    std::uint64_t N = 0;
    Int lcm_value = 1;
    Int rad_value = 1;
    FactorLedger ledger;
};

namespace detail {

inline const std::vector<unsigned long>& trial_primes() {
    static const std::vector<unsigned long> table = [] {
        std::vector<bool> is_comp(kTrialLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (is_comp[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) is_comp[j] = true;
        }
        return out;
    }();
    return table;
}

inline Int floyd_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, g = 1;
        auto step = [&](const Int& v) { return Int((v * v + c) % n); };
        while (g == 1) {
            x = step(x);
            y = step(step(y));
            g = gcd(Int(abs(x - y)), n);
        }
        if (g != n) return g;
    }
}

inline void split_large(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    Int g = floyd_rho(n);
    split_large(g, out);
    split_large(n / g, out);
}

/// Factorization of v > 0 as prime -> exponent.
inline std::map<Int, unsigned> factor(Int v) {
    std::map<Int, unsigned> out;
    for (unsigned long p : trial_primes()) {
        if (Int(p) * p > v) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++e;
        }
        if (e) out[Int(p)] = e;
    }
    if (v == 1) return out;
    const Int limit = Int(kTrialLimit) * kTrialLimit;
    if (v < limit) {
        // no factor <= 10^6 remains, so v is prime
        ++out[v];
        return out;
    }
    std::map<Int, unsigned> rest;
    split_large(v, rest);
    for (const auto& [p, e] : rest) out[p] += e;
    return out;
}

}  // namespace detail

/**
 * Naive ledger, lcm and radical over n in [1, N]. Throws cap_exceeded above
 * kMaxN, and error if the ledger-rebuilt lcm disagrees with the gcd chain.
 */
inline OracleResult naive_run(const IntPoly& f, std::uint64_t N) {
    if (N > kMaxN) throw cap_exceeded("oracle is capped at N = " + std::to_string(kMaxN));
    OracleResult out{N, 1, 1, FactorLedger{f, N, 0, {}, 0}};
    const Int DN = (1 + f.degree() * abs(f.leading())) * Int(static_cast<unsigned long>(N));
    out.ledger.B = DN.get_ui();
    for (std::uint64_t n = 1; n <= N; ++n) {
        Int v = abs(eval(f, Int(static_cast<unsigned long>(n))));
        if (v == 0) {
            ++out.ledger.skipped_zero_count;
            continue;
        }
        out.lcm_value = out.lcm_value / gcd(out.lcm_value, v) * v;
        for (const auto& [p, e] : detail::factor(v)) {
            auto& rec = out.ledger.entries[p];
            rec.p = p;
            rec.alpha += e;
            rec.hit_count += 1;
            rec.max_exp = std::max(rec.max_exp, e);
            if (rec.layers.size() < e) rec.layers.resize(e, 0);
            for (unsigned i = 0; i < e; ++i) rec.layers[i] += 1;
            if (p > Int(static_cast<unsigned long>(N))) rec.hits.emplace_back(n, e);
        }
    }
    Int rebuilt = 1;
    for (const auto& [p, rec] : out.ledger.entries) {
        rebuilt *= pow_ui(p, rec.max_exp);
        out.rad_value *= p;
    }
    if (rebuilt != out.lcm_value) throw error("oracle: ledger lcm disagrees with gcd-chain lcm");
    return out;
}

}  // namespace lcmlab::oracle
