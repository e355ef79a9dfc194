#pragma once

/**
 * @file sieve.hpp
 * @brief Exact prime-exponent ledger of Q(N) = prod_{n<=N} |f(n)|.
 *
 * Three legs:
 *   1. for each prime p <= B, layer counts #{n <= N : p^i | f(n)} from the
 *      roots of f modulo p^i (no scan over n);
 *   2. a segmented pass over n that divides every f(n) by the primes p <= B,
 *      touching only n in root progressions, and cross-checks leg 1;
 *   3. factorization of the leftover cofactors, all of whose primes exceed B.
 */

#include "bigint.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace lcmlab {

/**
 * Exponent statistics of one prime over n in [1, N].
 *
 * layers[i] counts n with p^(i+1) | f(n), so layers[0] is the hit count.
 * hits lists (n, v_p(f(n))) and is populated only when p > N, where at most
 * a handful of n qualify.
 */
struct PrimeLocalData {
    Int p;
    u64 alpha = 0;
    unsigned max_exp = 0;
    u64 hit_count = 0;
    std::vector<u64> layers;
    std::vector<std::pair<u64, unsigned>> hits;

    /// b_i in the 1-based layer numbering; 0 past the last layer.
    u64 layer(unsigned i) const { return i >= 1 && i <= layers.size() ? layers[i - 1] : 0; }

    /// Records one value n with v_p(f(n)) = v >= 1.
    void add_value(u64 n, unsigned v, bool keep_hit) {
        if (layers.size() < v) layers.resize(v, 0);
        for (unsigned i = 0; i < v; ++i) ++layers[i];
        alpha += v;
        ++hit_count;
        max_exp = std::max(max_exp, v);
        if (keep_hit) hits.emplace_back(n, v);
    }

    PrimeLocalData& operator+=(const PrimeLocalData& other) {
        if (layers.size() < other.layers.size()) layers.resize(other.layers.size(), 0);
        for (std::size_t i = 0; i < other.layers.size(); ++i) layers[i] += other.layers[i];
        alpha += other.alpha;
        hit_count += other.hit_count;
        max_exp = std::max(max_exp, other.max_exp);
        hits.insert(hits.end(), other.hits.begin(), other.hits.end());
        std::sort(hits.begin(), hits.end());
        return *this;
    }

    friend bool operator==(const PrimeLocalData&, const PrimeLocalData&) = default;
};

struct FactorLedger {
    IntPoly f;
    u64 N = 0;
    u64 B = 0;
    std::map<Int, PrimeLocalData> entries;
    u64 skipped_zero_count = 0;
};

struct SieveOptions {
    /// Sieve bound; 0 selects D*N. Values below D*N are rejected.
    u64 bound = 0;
    u64 segment_size = u64{1} << 16;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    rho_budget budget{};
    /// Called once per n with f(n) != 0, in increasing n, with the full
    /// factorization of |f(n)| (primes ascending).
    std::function<void(u64 n, const factorization&)> on_value;
};

namespace detail {

inline void finish_layers(PrimeLocalData& d) {
    while (!d.layers.empty() && d.layers.back() == 0) d.layers.pop_back();
    d.alpha = 0;
    for (u64 b : d.layers) d.alpha += b;
    d.hit_count = d.layers.empty() ? 0 : d.layers[0];
    d.max_exp = static_cast<unsigned>(d.layers.size());
}

/// Local data given the level-1 roots, excluding the integer zeros of f.
inline PrimeLocalData local_data_from_roots(const IntPoly& f, const RootSet& level1, u64 N, const Int& cap,
                                            const std::vector<Int>& zeros) {
    PrimeLocalData out;
    out.p = from_u64(level1.p);
    if (level1.empty() || N == 0) return out;
    const u64 p = level1.p;
    const u64 n_zero = zeros.size();
    RootSet cur = level1;
    bool exhausted = false;
    // progression counting while every residue class mod p^k fits in [1, N]
    while (cur.modulus <= N) {
        u64 count = 0;
        for (u64 r : cur.roots) count += count_progression(r, cur.modulus, N);
        out.layers.push_back(count - n_zero);
        if (cur.empty()) {
            exhausted = true;
            break;
        }
        try {
            cur = lift_roots(f, cur, cap);
        } catch (const cap_exceeded&) {
            exhausted = true;
            break;
        }
    }
    if (!exhausted) {
        // p^k > N: each root r in [1, N] is a single value n = r
        const unsigned first = cur.k;
        const bool keep_hits = (p > N);
        for (u64 r : cur.roots) {
            if (r == 0 || r > N) continue;
            Int v = abs(eval(f, from_u64(r)));
            if (v == 0) continue;
            const unsigned e = remove_factor(v, out.p);
            if (out.layers.size() < e) out.layers.resize(e, 0);
            for (unsigned i = first; i <= e; ++i) ++out.layers[i - 1];
            if (keep_hits) out.hits.emplace_back(r, e);
        }
        std::sort(out.hits.begin(), out.hits.end());
    }
    finish_layers(out);
    return out;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

/**
 * Exact statistics of p over n in [1, N]. cap should be max |f(n)| on the
 * range; levels with p^i > cap are never visited.
 */
inline PrimeLocalData local_data(const IntPoly& f, u64 p, u64 N, const Int& cap, std::uint64_t seed = 0) {
    const auto zeros = N == 0 ? std::vector<Int>{} : integer_zeros(f, Int(1), from_u64(N));
    return detail::local_data_from_roots(f, roots_mod_p(f, p, seed), N, cap, zeros);
}

namespace detail {

struct small_prime {
    u64 p;
    std::vector<u64> roots;  // level-1 roots
};

/// Per-segment accumulation: small primes by index, large primes by value.
struct segment_result {
    std::vector<PrimeLocalData> small;
    std::map<Int, PrimeLocalData> large;
    std::vector<std::pair<u64, factorization>> values;
    u64 zeros = 0;
};

inline segment_result sieve_segment(const IntPoly& f, u64 lo, u64 hi, u64 N, const std::vector<small_prime>& primes,
                                    const SieveOptions& opt) {
    segment_result out;
    out.small.resize(primes.size());
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Int> residual(len);
    std::vector<factorization> parts(opt.on_value ? len : 0);
    for (std::size_t i = 0; i < len; ++i) residual[i] = abs(eval(f, from_u64(lo + i)));
    for (std::size_t idx = 0; idx < primes.size(); ++idx) {
        const u64 p = primes[idx].p;
        const bool keep_hits = p > N;
        for (u64 r : primes[idx].roots) {
            // first n >= lo with n = r mod p
            u64 n = lo + (r + p - lo % p) % p;
            for (; n <= hi; n += p) {
                Int& v = residual[n - lo];
                if (v == 0) continue;
                unsigned e = 0;
                while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
                    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
                    ++e;
                }
                if (e == 0) continue;
                if (out.small[idx].p == 0) out.small[idx].p = from_u64(p);
                out.small[idx].add_value(n, e, keep_hits);
                if (opt.on_value) parts[n - lo].emplace_back(from_u64(p), e);
            }
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        const u64 n = lo + i;
        if (residual[i] == 0) {
            ++out.zeros;
            continue;
        }
        if (residual[i] > 1) {
            for (const auto& [q, e] : factor_cofactor(residual[i], opt.seed ^ n, opt.budget)) {
                auto& rec = out.large[q];
                rec.p = q;
                rec.add_value(n, e, true);
                if (opt.on_value) parts[i].emplace_back(q, e);
            }
        }
        if (opt.on_value) {
            std::sort(parts[i].begin(), parts[i].end());
            out.values.emplace_back(n, std::move(parts[i]));
        }
    }
    return out;
}

}  // namespace detail

/**
 * Full factorization ledger of Q(N).
 *
 * Throws ledger_mismatch if the analytic per-prime data and the sieved
 * exponents disagree, and factor_timeout if a cofactor resists rho.
 */
inline FactorLedger build_ledger(const IntPoly& f, u64 N, SieveOptions opt = {}) {
    const Int D = linear_zone_constant(f);
    const Int DN = D * from_u64(N);
    if (!fits_u64(DN)) throw std::invalid_argument("sieve bound D*N exceeds 64 bits");
    u64 B = opt.bound == 0 ? to_u64(DN) : opt.bound;
    if (from_u64(B) < DN) throw std::invalid_argument("sieve bound must be at least D*N = " + to_string(DN));
    FactorLedger ledger{f, N, B, {}, 0};
    if (N == 0) return ledger;
    if (opt.segment_size == 0) opt.segment_size = 1;

    const Int cap = max_abs_on_range(f, from_u64(N));
    const auto zeros = integer_zeros(f, Int(1), from_u64(N));
    const auto primes = primes_up_to(B);

    // leg 1: analytic local data per prime
    std::vector<RootSet> level1(primes.size());
    std::vector<PrimeLocalData> analytic(primes.size());
    detail::parallel_for(primes.size(), opt.workers, [&](std::size_t i) {
        level1[i] = roots_mod_p(f, primes[i], opt.seed);
        analytic[i] = detail::local_data_from_roots(f, level1[i], N, cap, zeros);
    });

    std::vector<detail::small_prime> rooted;
    std::vector<std::size_t> rooted_index;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (level1[i].empty()) continue;
        rooted.push_back({primes[i], level1[i].roots});
        rooted_index.push_back(i);
    }

    // leg 2 + 3: segmented pass, processed in waves of `workers` segments
    std::vector<PrimeLocalData> sieved(rooted.size());
    std::map<Int, PrimeLocalData> large;
    const u64 seg = opt.segment_size;
    const u64 n_segments = (N + seg - 1) / seg;
    const unsigned workers = std::max(1u, opt.workers);
    for (u64 wave = 0; wave < n_segments; wave += workers) {
        const u64 count = std::min<u64>(workers, n_segments - wave);
        std::vector<detail::segment_result> results(count);
        detail::parallel_for(count, workers, [&](std::size_t j) {
            const u64 lo = (wave + j) * seg + 1;
            const u64 hi = std::min(N, lo + seg - 1);
            results[j] = detail::sieve_segment(f, lo, hi, N, rooted, opt);
        });
        for (auto& res : results) {
            for (std::size_t i = 0; i < rooted.size(); ++i) {
                if (res.small[i].p == 0) continue;
                if (sieved[i].p == 0) sieved[i].p = res.small[i].p;
                sieved[i] += res.small[i];
            }
            for (auto& [q, rec] : res.large) {
                auto& dst = large[q];
                if (dst.p == 0) dst.p = q;
                dst += rec;
            }
            ledger.skipped_zero_count += res.zeros;
            if (opt.on_value) {
                for (const auto& [n, fac] : res.values) opt.on_value(n, fac);
            }
        }
    }

    for (std::size_t j = 0; j < rooted.size(); ++j) {
        auto& expect = analytic[rooted_index[j]];
        if (sieved[j].p == 0) sieved[j].p = expect.p;
        if (!(sieved[j] == expect)) {
            throw ledger_mismatch("prime " + std::to_string(rooted[j].p) + ": analytic alpha " +
                                  std::to_string(expect.alpha) + " vs sieved " + std::to_string(sieved[j].alpha));
        }
        if (expect.alpha > 0) ledger.entries.emplace(expect.p, std::move(expect));
    }
    for (auto& [q, rec] : large) {
        if (from_u64(B) >= q) {
            throw ledger_mismatch("cofactor prime " + to_string(q) + " does not exceed the sieve bound");
        }
        ledger.entries.emplace(q, std::move(rec));
    }
    return ledger;
}

}  // namespace lcmlab
