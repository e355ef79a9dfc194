#pragma once

/**
 * @file aggregate.hpp
 * @brief Scalar statistics derived from a ledger, and multi-N sweeps.
 *
 * All logs are natural logs accumulated with compensated summation. Zone
 * boundaries: small p <= N, linear N < p <= D*N, large p > D*N.
 */

#include "bigint.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "primes.hpp"
#include "sieve.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcmlab {

/// Kahan-Babuska (Neumaier) compensated accumulator.
class compensated_sum {
public:
    compensated_sum& operator+=(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct SweepRecord {
    u64 N = 0;
    double log_Q = 0, log_QS = 0, log_QLI = 0, log_QL = 0;
    double log_L = 0, log_rad = 0;
    double ratio_L = 0, ratio_rad = 0, ratio_QS = 0;
    u64 n_primes = 0, n_squareful = 0, n_repeated = 0;
    double seconds = 0;
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Zone of p relative to N and D*N.
enum class zone { small, linear, large };

inline zone zone_of(const Int& p, u64 N, const Int& DN) {
    if (p <= from_u64(N)) return zone::small;
    if (p <= DN) return zone::linear;
    return zone::large;
}

/// Ratio fields are NaN when d = 1 or N <= 1 (normalizer is zero or undefined).
inline SweepRecord summarize(const FactorLedger& ledger) {
    SweepRecord rec;
    rec.N = ledger.N;
    const int d = ledger.f.degree();
    const Int DN = linear_zone_constant(ledger.f) * from_u64(ledger.N);
    compensated_sum q, qs, qli, ql, l, rad;
    for (const auto& [p, data] : ledger.entries) {
        const double lp = log_abs(p);
        const double contrib = static_cast<double>(data.alpha) * lp;
        q += contrib;
        switch (zone_of(p, ledger.N, DN)) {
            case zone::small: qs += contrib; break;
            case zone::linear: qli += contrib; break;
            case zone::large: ql += contrib; break;
        }
        l += static_cast<double>(data.max_exp) * lp;
        rad += lp;
        ++rec.n_primes;
        if (data.alpha >= 2) ++rec.n_squareful;
        if (data.hit_count >= 2) ++rec.n_repeated;
    }
    rec.log_Q = q.value();
    rec.log_QS = qs.value();
    rec.log_QLI = qli.value();
    rec.log_QL = ql.value();
    rec.log_L = l.value();
    rec.log_rad = rad.value();
    const double n = static_cast<double>(ledger.N);
    const double nlogn = ledger.N > 1 ? n * std::log(n) : 0.0;
    if (d >= 2 && nlogn > 0) {
        rec.ratio_L = rec.log_L / ((d - 1) * nlogn);
        rec.ratio_rad = rec.log_rad / ((d - 1) * nlogn);
    } else {
        rec.ratio_L = rec.ratio_rad = kNaN;
    }
    rec.ratio_QS = nlogn > 0 ? rec.log_QS / nlogn : kNaN;
    return rec;
}

/// One schedule entry: a record, or the error that left a gap.
struct SweepOutcome {
    u64 N = 0;
    std::optional<SweepRecord> record;
    std::string error;
};

struct SweepOptions {
    /// Explicit sieve bound; must be >= D*N at every N. Empty means D*N.
    std::optional<u64> bound;
    SieveOptions sieve{};
    bool timing = false;
};

/**
 * One independent ledger per N, streamed to sink in schedule order. Build
 * failures become gaps; the sweep continues.
 */
inline std::vector<SweepOutcome> sweep(const IntPoly& f, const std::vector<u64>& schedule, const SweepOptions& opt,
                                       const std::function<void(const SweepOutcome&)>& sink = {}) {
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) throw std::invalid_argument("schedule must be strictly increasing");
    }
    std::vector<SweepOutcome> out;
    for (u64 N : schedule) {
        SweepOutcome row{N, std::nullopt, {}};
        const auto start = std::chrono::steady_clock::now();
        try {
            SieveOptions so = opt.sieve;
            so.bound = opt.bound.value_or(0);
            auto rec = summarize(build_ledger(f, N, so));
            if (opt.timing) {
                rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            }
            row.record = rec;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        if (sink) sink(row);
        out.push_back(std::move(row));
    }
    return out;
}

/// sum_{p <= B} rho_f(p) ln p / (p - 1).
inline double chebotarev_partial_sum(const IntPoly& f, u64 B, std::uint64_t seed = 0) {
    if (B < 2) throw std::invalid_argument("chebotarev_partial_sum requires B >= 2");
    compensated_sum acc;
    for (u64 p : primes_up_to(B)) {
        const auto roots = roots_mod_p(f, p, seed);
        if (roots.empty()) continue;
        acc += static_cast<double>(roots.size()) * std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
    }
    return acc.value();
}

}  // namespace lcmlab
