// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "lcmlab/aggregate.hpp"
#include "lcmlab/analysis.hpp"
#include "lcmlab/io.hpp"
#include "lcmlab/oracle.hpp"
#include "lcmlab/sieve.hpp"
#include "test_polys.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace lcmlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)}); }

Outcome oracle_equivalence() {
    Outcome out;
    std::vector<u64> ns;
    for (u64 n = 1; n <= 200; ++n) ns.push_back(n);
    ns.push_back(500);
    for (const auto& f : testing::acceptance_polys()) {
        for (u64 N : ns) {
            const auto naive = oracle::naive_run(f, N);
            const auto ledger = build_ledger(f, N);
            if (ledger.entries != naive.ledger.entries) {
                out.fail(f.to_string() + " N=" + std::to_string(N) + ": ledgers differ");
                continue;
            }
            const auto rec = summarize(ledger);
            const double exact_L = log_abs(naive.lcm_value), exact_rad = log_abs(naive.rad_value);
            if (!rel_close(rec.log_L, exact_L, 1e-9) || !rel_close(rec.log_rad, exact_rad, 1e-9)) {
                out.fail(f.to_string() + " N=" + std::to_string(N) + ": log_L/log_rad off");
            }
        }
    }
    if (out.ok) out.detail = "4 polys x 201 N values";
    return out;
}

Outcome naive_multiplicity() {
    Outcome out;
    for (const auto& f : testing::acceptance_polys()) {
        const auto r = check_naive_multiplicity(build_ledger(f, 1000));
        if (r.status != check_status::pass) out.fail(f.to_string() + ": " + r.violations.front().subject);
    }
    return out;
}

Outcome refined_multiplicity() {
    Outcome out;
    std::string n0s;
    for (const auto& f : testing::acceptance_polys()) {
        const auto r = check_refined_multiplicity(build_ledger(f, 1000));
        if (r.status != check_status::pass) out.fail(f.to_string() + ": " + r.violations.front().subject + " " + r.violations.front().observed);
        const auto scan = multiplicity_thresholds(f, 1000);
        if (scan.refined_n0 >= 1000) out.fail(f.to_string() + ": empirical N0 = " + std::to_string(scan.refined_n0));
        n0s += (n0s.empty() ? "" : " ") + std::to_string(scan.refined_n0);
    }
    if (out.ok) out.detail = "empirical N0: " + n0s;
    return out;
}

Outcome decomposition() {
    Outcome out;
    const u64 N = 10000;
    for (const auto& f : testing::acceptance_polys()) {
        const auto rec = summarize(build_ledger(f, N));
        if (!rel_close(rec.log_Q, rec.log_QS + rec.log_QLI + rec.log_QL, 1e-9)) out.fail(f.to_string() + ": zone sum");
        double direct = 0;
        for (u64 n = 1; n <= N; ++n) {
            const Int v = eval(f, from_u64(n));
            if (v != 0) direct += log_abs(v);
        }
        if (!rel_close(rec.log_Q, direct, 1e-6)) out.fail(f.to_string() + ": direct sum");
    }
    return out;
}

Outcome zone_inequalities() {
    Outcome out;
    for (const auto& f : testing::acceptance_polys()) {
        const auto ledger = build_ledger(f, 10000);
        const auto rec = summarize(ledger);
        const int d = f.degree();
        if (!((d - 1) * rec.log_L >= rec.log_QL)) out.fail(f.to_string() + ": (d-1) log_L < log_QL");
        if (!(d * (d - 1) / 2.0 * rec.log_rad >= rec.log_QL)) out.fail(f.to_string() + ": rad bound");
        if (check_zone_inequalities(ledger).status != check_status::pass) out.fail(f.to_string() + ": exact check");
    }
    return out;
}

Outcome ratio_trend() {
    Outcome out;
    const IntPoly f{1, 0, 1};
    double prev = -1;
    std::ostringstream seen;
    for (u64 N : {1000ull, 10000ull, 100000ull}) {
        const double r = summarize(build_ledger(f, N)).ratio_L;
        seen << (prev < 0 ? "" : " ") << r;
        if (!(r > prev)) out.fail("ratio_L not increasing at N=" + std::to_string(N));
        prev = r;
    }
    if (!(prev > 0.5 && prev < 1.1)) out.fail("ratio_L at 1e5 outside (0.5, 1.1)");
    out.detail = (out.ok ? "" : out.detail + "; ") + "ratio_L: " + seen.str();
    return out;
}

Outcome divided_difference() {
    Outcome out;
    const auto stats = divided_difference_trials(1000, 2024);
    if (stats.agreements != 1000) out.fail(stats.failures.empty() ? "disagreement" : stats.failures.front());
    u64 harvested = 0, large = 0;
    for (const auto& f : testing::acceptance_polys()) {
        const auto r = check_divided_difference(build_ledger(f, 1000), 0, 1);
        harvested += static_cast<u64>(r.empirical_constants.at("harvested_tuples"));
        large += static_cast<u64>(r.empirical_constants.at("harvested_large_zone"));
        if (r.status != check_status::pass) out.fail(f.to_string() + ": " + r.violations.front().subject);
    }
    if (out.ok) {
        out.detail = "1000 trials; " + std::to_string(harvested) + " harvested tuples (" + std::to_string(large) +
                     " at p > DN)";
    }
    return out;
}

Outcome amgm() {
    Outcome out;
    const auto r = amgm_suite(1000, 7, 6, 1000);
    if (r.status != check_status::pass) out.fail(r.violations.front().subject + " " + r.violations.front().observed);
    if (out.ok) out.detail = std::to_string(static_cast<u64>(r.empirical_constants.at("cases"))) + " cases";
    return out;
}

std::string sweep_csv(const IntPoly& f, unsigned workers) {
    SweepOptions opt;
    opt.sieve.workers = workers;
    std::string csv = io::csv_preamble(f, 0, "DN") + std::string(io::kCsvColumns) + "\n";
    for (const auto& o : sweep(f, {10000}, opt)) csv += (o.record ? io::csv_row(*o.record) : "error") + "\n";
    return csv;
}

Outcome determinism() {
    Outcome out;
    for (const auto& f : testing::acceptance_polys()) {
        if (sweep_csv(f, 1) != sweep_csv(f, 8)) out.fail(f.to_string() + ": CSV differs between 1 and 8 workers");
    }
    return out;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"naive multiplicity (p > N, alpha <= d^2)", naive_multiplicity},
        {"refined multiplicity (p > DN)", refined_multiplicity},
        {"decomposition identity", decomposition},
        {"zone inequalities", zone_inequalities},
        {"ratio_L trend for x^2 + 1", ratio_trend},
        {"divided-difference suite", divided_difference},
        {"AM-GM ratio suite", amgm},
        {"determinism across worker counts", determinism},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", index, name, secs, o.detail.empty() ? "" : ": ",
                    o.detail.c_str());
        std::fflush(stdout);
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
