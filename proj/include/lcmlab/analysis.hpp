#pragma once

/**
 * @file analysis.hpp
 * @brief Checks of the multiplicity bounds, zone inequalities, the
 *        divided-difference quantity A, and the symmetric-sum ratio bound.
 *
 * Checks with explicit finite bounds assert and list violations. Checks of
 * statements with unspecified constants only report empirical values and
 * always pass.
 */

#include "aggregate.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lcmlab {

enum class check_status { pass, fail, not_applicable };

inline std::string_view to_string(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        case check_status::not_applicable: return "not-applicable";
    }
    return "fail";
}

struct Violation {
    std::string subject;  // prime or tuple
    std::string observed;
    std::string bound;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    std::string check_name;
    std::string poly;
    u64 N = 0;
    std::map<std::string, std::string> parameters;
    check_status status = check_status::pass;
    bool asserted = true;
    std::vector<Violation> violations;
    std::map<std::string, double> empirical_constants;

    void violate(std::string subject, std::string observed, std::string bound) {
        violations.push_back({std::move(subject), std::move(observed), std::move(bound)});
        status = check_status::fail;
    }
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"amgm_ratio",         "divided_difference", "hensel_formula",
                                                "naive_multiplicity", "refined_multiplicity", "squareful_ratios",
                                                "zone_inequalities"};
    return names;
}

namespace detail {

inline VerificationReport make_report(std::string name, const FactorLedger& ledger) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.poly = ledger.f.to_string();
    r.N = ledger.N;
    return r;
}

inline std::string u(u64 v) { return std::to_string(v); }

}  // namespace detail

/// Every prime p > N: alpha <= d^2, hit_count <= d, max_exp <= d.
inline VerificationReport check_naive_multiplicity(const FactorLedger& ledger) {
    auto r = detail::make_report("naive_multiplicity", ledger);
    const u64 d = static_cast<u64>(ledger.f.degree());
    const Int N = from_u64(ledger.N);
    u64 checked = 0, max_alpha = 0;
    for (const auto& [p, data] : ledger.entries) {
        if (p <= N) continue;
        ++checked;
        max_alpha = std::max(max_alpha, data.alpha);
        const auto name = to_string(p);
        if (data.alpha > d * d) r.violate(name, "alpha=" + detail::u(data.alpha), "d^2=" + detail::u(d * d));
        if (data.hit_count > d) r.violate(name, "hit_count=" + detail::u(data.hit_count), "d=" + detail::u(d));
        if (data.max_exp > d) r.violate(name, "max_exp=" + detail::u(data.max_exp), "d=" + detail::u(d));
    }
    r.parameters["zone"] = "p > N";
    r.empirical_constants["primes_checked"] = static_cast<double>(checked);
    r.empirical_constants["max_alpha"] = static_cast<double>(max_alpha);
    return r;
}

/// Every prime p > D*N: alpha <= d(d-1)/2 and b_i <= d - i for all i >= 1.
inline VerificationReport check_refined_multiplicity(const FactorLedger& ledger) {
    auto r = detail::make_report("refined_multiplicity", ledger);
    const unsigned d = static_cast<unsigned>(ledger.f.degree());
    const Int D = linear_zone_constant(ledger.f);
    const Int DN = D * from_u64(ledger.N);
    const u64 alpha_bound = u64{d} * (d - 1) / 2;
    u64 checked = 0, max_alpha = 0, max_hits = 0;
    for (const auto& [p, data] : ledger.entries) {
        if (p <= DN) continue;
        ++checked;
        max_alpha = std::max(max_alpha, data.alpha);
        max_hits = std::max(max_hits, data.hit_count);
        const auto name = to_string(p);
        if (data.alpha > alpha_bound) {
            r.violate(name, "alpha=" + detail::u(data.alpha), "d(d-1)/2=" + detail::u(alpha_bound));
        }
        const unsigned top = std::max<unsigned>(d, static_cast<unsigned>(data.layers.size()));
        for (unsigned i = 1; i <= top; ++i) {
            const u64 bound = i <= d ? d - i : 0;
            if (data.layer(i) > bound) {
                r.violate(name, "b_" + std::to_string(i) + "=" + detail::u(data.layer(i)), "d-i=" + detail::u(bound));
            }
        }
    }
    r.parameters["zone"] = "p > D*N";
    r.parameters["D"] = to_string(D);
    if (checked == 0) r.status = check_status::not_applicable;
    r.empirical_constants["primes_checked"] = static_cast<double>(checked);
    r.empirical_constants["max_alpha"] = static_cast<double>(max_alpha);
    r.empirical_constants["max_hit_count"] = static_cast<double>(max_hits);
    return r;
}

/**
 * Empirical thresholds for the two multiplicity checks over N' in [1, N_max].
 * n0 is one past the last N' that has a violation (1 if none does).
 */
struct ThresholdScan {
    u64 n_max = 0;
    u64 naive_n0 = 1;
    u64 refined_n0 = 1;
    u64 naive_violating_N = 0;    // number of N' with a violation
    u64 refined_violating_N = 0;
};

inline ThresholdScan multiplicity_thresholds(const IntPoly& f, u64 n_max, SieveOptions opt = {}) {
    ThresholdScan out;
    out.n_max = n_max;
    if (n_max == 0) return out;
    const unsigned d = static_cast<unsigned>(f.degree());
    const Int D = linear_zone_constant(f);
    // per prime: its hits in increasing n
    std::map<Int, std::vector<std::pair<u64, unsigned>>> hits;
    opt.on_value = [&](u64 n, const factorization& fac) {
        for (const auto& [q, e] : fac) {
            hits[q].emplace_back(n, e);
        }
    };
    opt.bound = 0;
    build_ledger(f, n_max, opt);

    // For prime q, a violation at N' needs N' inside q's zone and the stats
    // over n <= N' to break a bound. Stats only grow with N', so the set of
    // violating N' is an interval [first, zone_end].
    std::vector<int> naive_mark(n_max + 2, 0), refined_mark(n_max + 2, 0);
    auto mark = [](std::vector<int>& m, u64 lo, u64 hi) {
        ++m[lo];
        --m[hi + 1];
    };
    for (const auto& [q, list] : hits) {
        const u64 naive_end = q > from_u64(n_max) ? n_max : to_u64(q) - 1;  // N' < q
        Int refined_end_big = (q - 1) / D;                                  // D*N' < q
        const u64 refined_end = refined_end_big > from_u64(n_max) ? n_max : to_u64(refined_end_big);
        u64 alpha = 0, count = 0;
        unsigned max_exp = 0;
        std::vector<u64> layers(d + 2, 0);
        std::optional<u64> naive_first, refined_first;
        for (const auto& [n, e] : list) {
            alpha += e;
            ++count;
            max_exp = std::max(max_exp, e);
            for (unsigned i = 1; i <= std::min<unsigned>(e, d + 1); ++i) ++layers[i];
            if (!naive_first && (alpha > u64{d} * d || count > d || max_exp > d)) naive_first = n;
            if (!refined_first) {
                bool bad = alpha > u64{d} * (d - 1) / 2 || max_exp > d;
                for (unsigned i = 1; i <= d && !bad; ++i) bad = layers[i] > d - i;
                if (bad) refined_first = n;
            }
        }
        if (naive_first && *naive_first <= naive_end) mark(naive_mark, *naive_first, naive_end);
        if (refined_first && *refined_first <= refined_end) mark(refined_mark, *refined_first, refined_end);
    }
    int naive_run = 0, refined_run = 0;
    for (u64 n = 1; n <= n_max; ++n) {
        naive_run += naive_mark[n];
        refined_run += refined_mark[n];
        if (naive_run > 0) {
            out.naive_n0 = n + 1;
            ++out.naive_violating_N;
        }
        if (refined_run > 0) {
            out.refined_n0 = n + 1;
            ++out.refined_violating_N;
        }
    }
    return out;
}

/// |alpha - N rho/(p-1)| * ln p / ln N for unramified p <= N; report-only.
inline VerificationReport check_hensel_formula(const FactorLedger& ledger, std::uint64_t seed = 0) {
    auto r = detail::make_report("hensel_formula", ledger);
    r.asserted = false;
    const u64 N = ledger.N;
    if (N < 2 || ledger.f.degree() < 2) {
        r.status = check_status::not_applicable;
        return r;
    }
    const Int disc = discriminant(ledger.f);
    const double logN = std::log(static_cast<double>(N));
    double max_dev = 0, max_ramified = 0;
    compensated_sum dev_sum;
    u64 unramified = 0;
    // bins: [0,0.5) [0.5,1) [1,2) [2,4) [4,inf)
    std::array<u64, 5> hist{};
    for (u64 p : primes_up_to(N)) {
        const auto it = ledger.entries.find(from_u64(p));
        const double alpha = it == ledger.entries.end() ? 0.0 : static_cast<double>(it->second.alpha);
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) {
            const double scaled = alpha * static_cast<double>(p) / static_cast<double>(N);
            max_ramified = std::max(max_ramified, scaled);
            r.empirical_constants["ramified_alpha_p_over_N[" + std::to_string(p) + "]"] = scaled;
            continue;
        }
        const double rho = static_cast<double>(roots_mod_p(ledger.f, p, seed).size());
        const double predicted = static_cast<double>(N) * rho / static_cast<double>(p - 1);
        const double dev = std::fabs(alpha - predicted) * std::log(static_cast<double>(p)) / logN;
        max_dev = std::max(max_dev, dev);
        dev_sum += dev;
        ++unramified;
        const std::size_t bin = dev < 0.5 ? 0 : dev < 1 ? 1 : dev < 2 ? 2 : dev < 4 ? 3 : 4;
        ++hist[bin];
    }
    r.empirical_constants["max_deviation"] = max_dev;
    r.empirical_constants["mean_deviation"] = unramified ? dev_sum.value() / static_cast<double>(unramified) : 0.0;
    r.empirical_constants["unramified_primes"] = static_cast<double>(unramified);
    r.empirical_constants["max_ramified_alpha_p_over_N"] = max_ramified;
    const char* bins[] = {"hist[0,0.5)", "hist[0.5,1)", "hist[1,2)", "hist[2,4)", "hist[4,inf)"};
    for (std::size_t i = 0; i < hist.size(); ++i) r.empirical_constants[bins[i]] = static_cast<double>(hist[i]);
    return r;
}

/// h_s(x_1..x_t) for s = 0..max_s: sums of all degree-s monomials.
inline std::vector<Int> complete_homogeneous(std::span<const Int> xs, unsigned max_s) {
    std::vector<Int> h(max_s + 1, 0);
    h[0] = 1;
    for (const auto& x : xs) {
        for (unsigned s = 1; s <= max_s; ++s) h[s] += x * h[s - 1];
    }
    return h;
}

/// Defining sum of A in exact rationals.
inline Rational divided_difference_direct(const IntPoly& f, std::span<const Int> points) {
    Rational acc = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        Int denom = 1;
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k != j) denom *= points[j] - points[k];
        }
        Rational term(eval(f, points[j]), denom);
        term.canonicalize();
        acc += term;
    }
    return acc;
}

/// sum_{l = t-1}^{d} f_l h_{l-t+1}(points), with t = |points|.
inline Int divided_difference_expansion(const IntPoly& f, std::span<const Int> points) {
    const int d = f.degree();
    const int t = static_cast<int>(points.size());
    if (t - 1 > d) return 0;
    const auto h = complete_homogeneous(points, static_cast<unsigned>(d - t + 1));
    Int acc = 0;
    for (int l = t - 1; l <= d; ++l) acc += f.coeff(l) * h[static_cast<std::size_t>(l - t + 1)];
    return acc;
}

/**
 * A = sum_j f(m_j) / prod_{k != j} (m_j - m_k) over t = d - i + 1 distinct
 * points, computed from the definition and from the symmetric expansion.
 * Throws non_integral if the routes disagree or A is not an integer.
 */
inline Int divided_difference_A(const IntPoly& f, std::span<const Int> points) {
    const std::size_t t = points.size();
    if (t < 2 || t > static_cast<std::size_t>(f.degree()) + 1) {
        throw precondition_unmet("divided_difference_A needs 2 <= t <= d + 1 points");
    }
    std::set<Int> distinct(points.begin(), points.end());
    if (distinct.size() != t) throw precondition_unmet("divided_difference_A needs distinct points");
    const Rational direct = divided_difference_direct(f, points);
    if (direct.get_den() != 1) throw non_integral("A = " + direct.get_str() + " is not an integer");
    const Int expanded = divided_difference_expansion(f, points);
    if (direct.get_num() != expanded) {
        throw non_integral("A routes disagree: " + direct.get_str() + " vs " + to_string(expanded));
    }
    return expanded;
}

inline std::string tuple_string(std::span<const Int> points) {
    std::string s = "(";
    for (std::size_t i = 0; i < points.size(); ++i) s += (i ? "," : "") + to_string(points[i]);
    return s + ")";
}

/**
 * p^i | A for t = d - i + 1 points with p^i | f(m_j) and |m_j - m_k| < p.
 * Throws precondition_unmet when the hypotheses fail; t < 2 is reported as
 * not applicable.
 */
inline VerificationReport check_divisibility_A(const IntPoly& f, const Int& p, unsigned i, std::span<const Int> points) {
    VerificationReport r;
    r.check_name = "divisibility_A";
    r.poly = f.to_string();
    r.parameters["p"] = to_string(p);
    r.parameters["i"] = std::to_string(i);
    r.parameters["points"] = tuple_string(points);
    const int d = f.degree();
    if (static_cast<int>(i) > d || points.size() != static_cast<std::size_t>(d - static_cast<int>(i) + 1)) {
        throw precondition_unmet("need exactly d - i + 1 points");
    }
    if (points.size() < 2) {
        r.status = check_status::not_applicable;
        return r;
    }
    const Int pi = pow_ui(p, i);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (!mpz_divisible_p(eval(f, points[j]).get_mpz_t(), pi.get_mpz_t())) {
            throw precondition_unmet("p^i does not divide f(" + to_string(points[j]) + ")");
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (abs(points[j] - points[k]) >= p) throw precondition_unmet("points must differ by less than p");
        }
    }
    const Int A = divided_difference_A(f, points);
    if (!mpz_divisible_p(A.get_mpz_t(), pi.get_mpz_t())) r.violate(tuple_string(points), "A=" + to_string(A), "p^i | A");
    r.empirical_constants["A_is_zero"] = A == 0 ? 1.0 : 0.0;
    return r;
}

struct HarvestedTuple {
    Int p;
    unsigned i = 0;
    std::vector<Int> points;
};

/**
 * Every t-subset (t = d - i + 1 >= 2) of recorded hits n with p^i | f(n), for
 * primes p > N. Reads the per-prime hit lists; never rescans n.
 */
inline std::vector<HarvestedTuple> harvest_tuples(const FactorLedger& ledger) {
    std::vector<HarvestedTuple> out;
    const unsigned d = static_cast<unsigned>(ledger.f.degree());
    for (const auto& [p, data] : ledger.entries) {
        if (data.hits.size() < 2) continue;
        for (unsigned i = 1; i + 1 <= d; ++i) {
            const unsigned t = d - i + 1;
            std::vector<Int> pool;
            for (const auto& [n, v] : data.hits) {
                if (v >= i) pool.push_back(from_u64(n));
            }
            if (pool.size() < t) continue;
            std::vector<bool> pick(pool.size(), false);
            std::fill(pick.begin(), pick.begin() + t, true);
            do {
                HarvestedTuple tup{p, i, {}};
                for (std::size_t k = 0; k < pool.size(); ++k) {
                    if (pick[k]) tup.points.push_back(pool[k]);
                }
                out.push_back(std::move(tup));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    return out;
}

/// Random polynomial of the given degree with coefficients in [-bound, bound].
inline IntPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    return IntPoly(std::move(c));
}

struct IdentityTrialStats {
    u64 trials = 0;
    u64 agreements = 0;
    std::vector<std::string> failures;
};

/**
 * Seeded random trials of the two routes to A: degree 2..max_degree,
 * t in [2, d+1] distinct points with |m| <= point_bound.
 */
inline IdentityTrialStats divided_difference_trials(u64 trials, std::uint64_t seed, int max_degree = 6,
                                                    long point_bound = 1'000'000) {
    IdentityTrialStats out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(2, max_degree);
    std::uniform_int_distribution<long> pt(-point_bound, point_bound);
    for (u64 k = 0; k < trials; ++k) {
        const int d = deg(rng);
        const IntPoly f = random_poly(rng, d, 50);
        std::uniform_int_distribution<int> tdist(2, d + 1);
        const int t = tdist(rng);
        std::set<Int> pts;
        while (static_cast<int>(pts.size()) < t) pts.insert(Int(pt(rng)));
        std::vector<Int> points(pts.begin(), pts.end());
        std::shuffle(points.begin(), points.end(), rng);
        ++out.trials;
        try {
            divided_difference_A(f, points);
            ++out.agreements;
        } catch (const error& e) {
            out.failures.push_back(f.to_string() + " " + tuple_string(points) + ": " + e.what());
        }
    }
    return out;
}

/**
 * Random identity trials plus every harvested tuple at p > N. All tuples
 * must satisfy p^i | A. Tuples at p > D*N must also have A != 0 when f is
 * proved irreducible; otherwise a zero A is only counted.
 */
inline VerificationReport check_divided_difference(const FactorLedger& ledger, u64 trials = 1000,
                                                   std::uint64_t seed = 0) {
    auto r = detail::make_report("divided_difference", ledger);
    r.parameters["trials"] = detail::u(trials);
    r.parameters["seed"] = std::to_string(seed);
    const auto stats = divided_difference_trials(trials, seed);
    for (const auto& msg : stats.failures) r.violate("random", msg, "routes agree, A integral");
    const Int DN = linear_zone_constant(ledger.f) * from_u64(ledger.N);
    bool irreducible = false;
    if (ledger.f.degree() >= 2) {
        try {
            irreducible = profile(ledger.f).irreducible_hint == irreducibility::proved;
        } catch (const zero_discriminant&) {
        }
    }
    r.parameters["irreducible"] = irreducible ? "proved" : "not proved";
    const double d = ledger.f.degree();
    const double lead = log_abs(ledger.f.leading());
    u64 harvested = 0, large_zone = 0, zeros = 0, within_bound = 0;
    for (const auto& tup : harvest_tuples(ledger)) {
        ++harvested;
        const auto sub = check_divisibility_A(ledger.f, tup.p, tup.i, tup.points);
        const std::string subject = "p=" + to_string(tup.p) + " i=" + std::to_string(tup.i) + " " + tuple_string(tup.points);
        for (const auto& v : sub.violations) r.violate(subject, v.observed, v.bound);
        const Int A = divided_difference_expansion(ledger.f, tup.points);
        if (A == 0) ++zeros;
        if (tup.p > DN) {
            ++large_zone;
            if (A == 0 && irreducible) r.violate(subject, "A=0", "A != 0 for irreducible f");
            // |A| <= (1 + |f_d| d^i) N^i, compared in logs
            const double bound = std::log1p(std::exp(lead + tup.i * std::log(d))) + tup.i * std::log(double(ledger.N));
            if (A == 0 || log_abs(A) <= bound) ++within_bound;
        }
    }
    r.empirical_constants["random_trials"] = static_cast<double>(stats.trials);
    r.empirical_constants["random_agreements"] = static_cast<double>(stats.agreements);
    r.empirical_constants["harvested_tuples"] = static_cast<double>(harvested);
    r.empirical_constants["harvested_large_zone"] = static_cast<double>(large_zone);
    r.empirical_constants["harvested_A_zero"] = static_cast<double>(zeros);
    r.empirical_constants["large_zone_within_size_bound"] = static_cast<double>(within_bound);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/**
 * For t = d - i + 1 positive points and s = l - (d - i) >= 1:
 * h_s(m) / p_s(m) lies in [1, C(l, d-i)/t], and C(l, d-i)/t <= 2^d.
 * Exact integer cross-multiplied comparisons; s = 0 is not applicable.
 */
inline VerificationReport check_amgm_ratio(unsigned d, unsigned i, unsigned l, std::span<const Int> points) {
    VerificationReport r;
    r.check_name = "amgm_ratio";
    r.parameters = {{"d", std::to_string(d)}, {"i", std::to_string(i)}, {"l", std::to_string(l)},
                    {"points", tuple_string(points)}};
    if (i < 1 || i > d || l + i < d || l > d) throw precondition_unmet("need 1 <= i <= d and d - i <= l <= d");
    const unsigned t = d - i + 1;
    if (points.size() != t) throw precondition_unmet("need d - i + 1 points");
    for (const auto& m : points) {
        if (m <= 0) throw precondition_unmet("points must be positive");
    }
    const unsigned s = l - (d - i);
    if (s == 0) {
        r.status = check_status::not_applicable;
        return r;
    }
    const Int num = complete_homogeneous(points, s)[s];
    Int den = 0;
    for (const auto& m : points) den += pow_ui(m, s);
    const Int sharp = binomial(l, d - i);
    const auto subject = tuple_string(points);
    if (num < den) r.violate(subject, "h_s=" + to_string(num), ">= p_s=" + to_string(den));
    if (num * t > sharp * den) {
        r.violate(subject, "h_s*t=" + to_string(Int(num * t)), "<= C(l,d-i)*p_s=" + to_string(Int(sharp * den)));
    }
    if (sharp > pow_ui(Int(2), d) * t) r.violate("sharp bound", "C(l,d-i)/t=" + to_string(sharp) + "/" + std::to_string(t), "<= 2^d");
    r.empirical_constants["ratio"] = num.get_d() / den.get_d();
    r.empirical_constants["sharp_bound"] = sharp.get_d() / t;
    return r;
}

/**
 * Seeded random suite of check_amgm_ratio: `per_case` trials for every
 * (d, i, l) with d <= max_degree, 1 <= i <= d, d - i < l <= d. Points are
 * drawn from [1, point_bound], with every 8th case forced to equal points.
 */
inline VerificationReport amgm_suite(u64 per_case, std::uint64_t seed, unsigned max_degree = 6, long point_bound = 1000) {
    VerificationReport r;
    r.check_name = "amgm_ratio";
    r.parameters = {{"per_case", detail::u(per_case)}, {"seed", std::to_string(seed)},
                    {"max_degree", std::to_string(max_degree)}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pt(1, point_bound);
    u64 cases = 0, saturated = 0;
    double max_ratio_over_sharp = 0;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (unsigned i = 1; i <= d; ++i) {
            for (unsigned l = d - i + 1; l <= d; ++l) {
                for (u64 k = 0; k < per_case; ++k) {
                    std::vector<Int> points(d - i + 1);
                    const bool equal = (k % 8 == 0);
                    const long base = pt(rng);
                    for (auto& m : points) m = equal ? base : pt(rng);
                    const auto sub = check_amgm_ratio(d, i, l, points);
                    ++cases;
                    for (const auto& v : sub.violations) r.violate(v.subject, v.observed, v.bound);
                    const double q = sub.empirical_constants.at("ratio") / sub.empirical_constants.at("sharp_bound");
                    max_ratio_over_sharp = std::max(max_ratio_over_sharp, q);
                    if (equal && sub.empirical_constants.at("ratio") == sub.empirical_constants.at("sharp_bound")) {
                        ++saturated;
                    }
                }
            }
        }
    }
    r.empirical_constants["cases"] = static_cast<double>(cases);
    r.empirical_constants["equal_point_cases_at_sharp_bound"] = static_cast<double>(saturated);
    r.empirical_constants["max_ratio_over_sharp_bound"] = max_ratio_over_sharp;
    return r;
}

/// Squareful and repeated-hit prime ratios; report-only.
inline VerificationReport check_squareful_ratios(const FactorLedger& ledger) {
    auto r = detail::make_report("squareful_ratios", ledger);
    r.asserted = false;
    const Int DN = linear_zone_constant(ledger.f) * from_u64(ledger.N);
    u64 n_primes = 0, squareful = 0, repeated = 0, below = 0;
    for (const auto& [p, data] : ledger.entries) {
        ++n_primes;
        if (data.alpha >= 2) ++squareful;
        if (data.hit_count >= 2) ++repeated;
        if (p <= DN) ++below;
    }
    const double np = static_cast<double>(n_primes);
    r.empirical_constants["n_primes"] = np;
    r.empirical_constants["n_squareful"] = static_cast<double>(squareful);
    r.empirical_constants["n_repeated"] = static_cast<double>(repeated);
    r.empirical_constants["squareful_ratio"] = n_primes ? squareful / np : 0.0;
    r.empirical_constants["repeated_ratio"] = n_primes ? repeated / np : 0.0;
    r.empirical_constants["n_primes_le_DN"] = static_cast<double>(below);
    r.empirical_constants["n_primes_gt_DN"] = static_cast<double>(n_primes - below);
    return r;
}

/**
 * Q_L <= L^(d-1) and Q_L <= rad^(d(d-1)/2), with Q_L the part of Q(N) from
 * primes p > D*N. Compared as exact integers; log values are reported.
 */
inline VerificationReport check_zone_inequalities(const FactorLedger& ledger) {
    auto r = detail::make_report("zone_inequalities", ledger);
    const unsigned d = static_cast<unsigned>(ledger.f.degree());
    if (d < 2) {
        r.status = check_status::not_applicable;
        return r;
    }
    const Int DN = linear_zone_constant(ledger.f) * from_u64(ledger.N);
    Int QL = 1, L = 1, rad = 1;
    for (const auto& [p, data] : ledger.entries) {
        L *= pow_ui(p, data.max_exp);
        rad *= p;
        if (p > DN) QL *= pow_ui(p, data.alpha);
    }
    const Int lhs_L = pow_ui(L, d - 1);
    const Int lhs_rad = pow_ui(rad, d * (d - 1) / 2);
    if (QL > lhs_L) r.violate("Q_L vs L^(d-1)", "log Q_L=" + std::to_string(log_abs(QL)), "<= (d-1) log L");
    if (QL > lhs_rad) r.violate("Q_L vs rad^(d(d-1)/2)", "log Q_L=" + std::to_string(log_abs(QL)), "<= d(d-1)/2 log rad");
    const auto rec = summarize(ledger);
    r.empirical_constants["log_QL"] = rec.log_QL;
    r.empirical_constants["(d-1)*log_L"] = (d - 1) * rec.log_L;
    r.empirical_constants["d(d-1)/2*log_rad"] = d * (d - 1) / 2.0 * rec.log_rad;
    return r;
}

struct CheckOptions {
    u64 trials = 1000;
    std::uint64_t seed = 0;
    /// Run the empirical N0 scan for the multiplicity checks when N <= this.
    u64 threshold_scan_limit = 100'000;
    SieveOptions sieve{};
};

/// Runs the named checks over one ledger; reports sorted by check name.
inline std::vector<VerificationReport> run_checks(const FactorLedger& ledger, std::vector<std::string> names,
                                                  const CheckOptions& opt = {}) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::optional<ThresholdScan> scan;
    auto thresholds = [&]() -> const ThresholdScan& {
        if (!scan) scan = multiplicity_thresholds(ledger.f, ledger.N, opt.sieve);
        return *scan;
    };
    std::vector<VerificationReport> out;
    for (const auto& name : names) {
        if (name == "naive_multiplicity") {
            auto r = check_naive_multiplicity(ledger);
            if (ledger.N <= opt.threshold_scan_limit) {
                r.empirical_constants["empirical_N0"] = static_cast<double>(thresholds().naive_n0);
            }
            out.push_back(std::move(r));
        } else if (name == "refined_multiplicity") {
            auto r = check_refined_multiplicity(ledger);
            if (ledger.N <= opt.threshold_scan_limit) {
                r.empirical_constants["empirical_N0"] = static_cast<double>(thresholds().refined_n0);
            }
            out.push_back(std::move(r));
        } else if (name == "hensel_formula") {
            out.push_back(check_hensel_formula(ledger, opt.seed));
        } else if (name == "divided_difference") {
            out.push_back(check_divided_difference(ledger, opt.trials, opt.seed));
        } else if (name == "amgm_ratio") {
            auto r = amgm_suite(opt.trials, opt.seed, static_cast<unsigned>(std::max(ledger.f.degree(), 1)));
            r.poly = ledger.f.to_string();
            r.N = ledger.N;
            out.push_back(std::move(r));
        } else if (name == "squareful_ratios") {
            out.push_back(check_squareful_ratios(ledger));
        } else if (name == "zone_inequalities") {
            out.push_back(check_zone_inequalities(ledger));
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    return out;
}

}  // namespace lcmlab
