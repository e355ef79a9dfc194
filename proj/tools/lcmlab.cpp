// lcmlab: ledgers, sweeps and checks for lcm(f(1), ..., f(N)).

#include "lcmlab/aggregate.hpp"
#include "lcmlab/analysis.hpp"
#include "lcmlab/io.hpp"
#include "lcmlab/oracle.hpp"
#include "lcmlab/polynomial.hpp"
#include "lcmlab/sieve.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace lcmlab;
using json = nlohmann::ordered_json;

enum exit_code : int { kOk = 0, kConfigError = 1, kPartial = 2 };

struct common_flags {
    std::string poly;
    std::string workers = "1";
    std::uint64_t seed = 0;
    std::string out;
};

unsigned resolve_workers(const std::string& flag) {
    std::string value = flag;
    if (const char* env = std::getenv("LCMLAB_WORKERS"); env && *env) value = env;
    if (value == "auto") return std::max(1u, std::thread::hardware_concurrency());
    const long n = std::stol(value);
    if (n < 1) throw std::invalid_argument("workers must be >= 1 or \"auto\"");
    return static_cast<unsigned>(n);
}

/// Parses the polynomial and prints irreducibility warnings to stderr.
IntPoly load_poly(const std::string& text) {
    IntPoly f = parse_poly(text);
    if (f.degree() >= 2) {
        const auto prof = profile(f);
        switch (prof.irreducible_hint) {
            case irreducibility::reducible:
                std::cerr << "warning: reducible: conjecture ratios not meaningful\n";
                break;
            case irreducibility::assumed:
                std::cerr << "warning: irreducibility assumed, not proved (no certifying prime below 200)\n";
                break;
            case irreducibility::unknown:
                std::cerr << "warning: irreducibility unknown\n";
                break;
            case irreducibility::proved:
                break;
        }
    } else {
        std::cerr << "warning: degree 1: ratio columns are NaN\n";
    }
    return f;
}

/// stdout when path is empty or "-".
struct output {
    explicit output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::unique_ptr<std::ofstream> file;
};

json config_json(const IntPoly& f, const common_flags& c) {
    return {{"poly", f.to_string()}, {"seed", c.seed}};
}

std::optional<u64> parse_bound(const std::string& bound) {
    if (bound == "DN") return std::nullopt;
    if (bound.empty() || bound.size() > 19 || bound.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("--bound must be DN or a positive integer");
    }
    return std::stoull(bound);
}

int run_sweep(const common_flags& c, const std::string& n_list, const std::string& geom, const std::string& bound,
              const std::string& format, u64 segment, bool timing) {
    IntPoly f = load_poly(c.poly);
    std::vector<u64> schedule;
    if (!geom.empty()) {
        const auto a = geom.find(':'), b = geom.rfind(':');
        if (a == std::string::npos || a == b) throw parse_error("geometric schedule must be start:end:ratio", 1, 1);
        schedule = io::geometric_schedule(std::stoull(geom.substr(0, a)), std::stoull(geom.substr(a + 1, b - a - 1)),
                                          std::stod(geom.substr(b + 1)));
    } else {
        schedule = io::parse_schedule(n_list);
    }
    SweepOptions opt;
    opt.sieve.workers = resolve_workers(c.workers);
    opt.sieve.seed = c.seed;
    opt.sieve.segment_size = segment;
    opt.timing = timing;
    opt.bound = parse_bound(bound);
    if (opt.bound) {
        const Int D = linear_zone_constant(f);
        if (from_u64(*opt.bound) < D * from_u64(schedule.back())) {
            throw std::invalid_argument("--bound " + bound + " is below D*N = " + to_string(Int(D * from_u64(schedule.back()))));
        }
    }
    if (format != "csv" && format != "json" && format != "ndjson") throw std::invalid_argument("unknown format " + format);

    output out(c.out);
    auto& os = out.stream();
    bool gaps = false;
    if (format == "csv") {
        os << io::csv_preamble(f, c.seed, bound) << io::kCsvColumns << '\n' << std::flush;
    } else if (format == "ndjson") {
        json head = {{"schema_version", io::kSchemaVersion}, {"config", config_json(f, c)}};
        head["config"]["bound"] = bound;
        os << json{{"header", head}}.dump() << '\n' << std::flush;
    }
    json rows = json::array();
    sweep(f, schedule, opt, [&](const SweepOutcome& row) {
        if (!row.record) {
            gaps = true;
            std::cerr << "N=" << row.N << ": " << row.error << '\n';
        }
        if (format == "csv") {
            if (row.record) os << io::csv_row(*row.record) << '\n' << std::flush;
        } else if (format == "ndjson") {
            os << io::to_json(row).dump() << '\n' << std::flush;
        } else {
            rows.push_back(io::to_json(row));
        }
    });
    if (format == "json") {
        json doc = {{"schema_version", io::kSchemaVersion}, {"config", config_json(f, c)}, {"rows", rows}};
        doc["config"]["bound"] = bound;
        os << doc.dump(2) << '\n';
    }
    return gaps ? kPartial : kOk;
}

int run_verify(const common_flags& c, u64 N, const std::string& checks, u64 trials, const std::string& bound) {
    std::vector<std::string> names;
    if (checks == "all") {
        names = check_names();
    } else {
        std::stringstream ss(checks);
        for (std::string item; std::getline(ss, item, ',');) {
            const auto& valid = check_names();
            if (std::find(valid.begin(), valid.end(), item) == valid.end()) {
                std::cerr << "error: unknown check '" << item << "'; valid checks:";
                for (const auto& v : valid) std::cerr << ' ' << v;
                std::cerr << " all\n";
                return kConfigError;
            }
            names.push_back(item);
        }
    }
    IntPoly f = load_poly(c.poly);
    SieveOptions so;
    so.workers = resolve_workers(c.workers);
    so.seed = c.seed;
    so.bound = parse_bound(bound).value_or(0);
    const auto ledger = build_ledger(f, N, so);
    CheckOptions co;
    co.trials = trials;
    co.seed = c.seed;
    co.sieve = so;
    co.sieve.bound = 0;
    const auto reports = run_checks(ledger, names, co);
    json doc = {{"schema_version", io::kSchemaVersion}, {"config", config_json(f, c)}};
    doc["config"]["N"] = N;
    doc["config"]["B"] = ledger.B;
    doc["config"]["trials"] = trials;
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(io::to_json(r));
        if (r.asserted && r.status == check_status::fail) ok = false;
    }
    doc["reports"] = arr;
    output out(c.out);
    out.stream() << doc.dump(2) << '\n';
    return ok ? kOk : kPartial;
}

int run_local(const common_flags& c, u64 N, u64 p) {
    IntPoly f = load_poly(c.poly);
    if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const Int cap = N == 0 ? Int(0) : max_abs_on_range(f, from_u64(N));
    const auto data = local_data(f, p, N, cap, c.seed);
    const auto roots = roots_mod_p(f, p, c.seed);
    json doc = {{"schema_version", io::kSchemaVersion}, {"config", config_json(f, c)}};
    doc["config"]["N"] = N;
    doc["rho"] = roots.size();
    doc["roots_mod_p"] = roots.roots;
    doc["local"] = io::to_json(data);
    output out(c.out);
    out.stream() << doc.dump(2) << '\n';
    return kOk;
}

int run_oracle_check(const common_flags& c, u64 N) {
    if (N > oracle::kMaxN) {
        std::cerr << "error: oracle-check is capped at N = " << oracle::kMaxN << '\n';
        return kConfigError;
    }
    IntPoly f = load_poly(c.poly);
    SieveOptions so;
    so.workers = resolve_workers(c.workers);
    so.seed = c.seed;
    const auto pipeline = build_ledger(f, N, so);
    const auto naive = oracle::naive_run(f, N);
    json diffs = json::array();
    std::set<Int> primes;
    for (const auto& [p, _] : pipeline.entries) primes.insert(p);
    for (const auto& [p, _] : naive.ledger.entries) primes.insert(p);
    for (const auto& p : primes) {
        const auto a = pipeline.entries.find(p);
        const auto b = naive.ledger.entries.find(p);
        const bool in_a = a != pipeline.entries.end(), in_b = b != naive.ledger.entries.end();
        if (in_a && in_b && a->second == b->second) continue;
        diffs.push_back({{"p", to_string(p)},
                         {"pipeline", in_a ? io::to_json(a->second) : json(nullptr)},
                         {"oracle", in_b ? io::to_json(b->second) : json(nullptr)}});
    }
    json doc = {{"schema_version", io::kSchemaVersion}, {"config", config_json(f, c)}};
    doc["config"]["N"] = N;
    doc["identical"] = diffs.empty();
    doc["primes"] = primes.size();
    doc["diff"] = diffs;
    output out(c.out);
    out.stream() << doc.dump(2) << '\n';
    return diffs.empty() ? kOk : kPartial;
}

int run_identity(const common_flags& c, u64 trials, int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("--max-degree must be at least 2");
    const auto stats = divided_difference_trials(trials, c.seed, max_degree);
    json doc = {{"schema_version", io::kSchemaVersion},
                {"config", {{"seed", c.seed}, {"trials", trials}, {"max_degree", max_degree}}},
                {"trials", stats.trials},
                {"agreements", stats.agreements},
                {"failures", stats.failures}};
    output out(c.out);
    out.stream() << doc.dump(2) << '\n';
    return stats.failures.empty() ? kOk : kPartial;
}

void add_common(CLI::App* cmd, common_flags& c, bool needs_poly = true) {
    if (needs_poly) cmd->add_option("--poly", c.poly, "polynomial, e.g. \"x^2+1\" or \"1,0,1\"")->required();
    cmd->add_option("--seed", c.seed, "seed for rho and root splitting");
    cmd->add_option("--workers", c.workers, "worker threads or \"auto\" (LCMLAB_WORKERS overrides)");
    cmd->add_option("--out", c.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcmlab: exact lcm(f(1..N)) ledgers, sweeps and verification"};
    app.require_subcommand(1);
    common_flags c;

    std::string n_list, geom, bound = "DN", format = "csv";
    u64 segment = u64{1} << 16;
    bool timing = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "one statistics row per N");
    add_common(sweep_cmd, c);
    auto* n_opt = sweep_cmd->add_option("--n", n_list, "comma-separated N values");
    auto* g_opt = sweep_cmd->add_option("--geom", geom, "geometric schedule start:end:ratio");
    n_opt->excludes(g_opt);
    sweep_cmd->add_option("--bound", bound, "sieve bound: DN or an integer >= D*N");
    sweep_cmd->add_option("--format", format, "csv | json | ndjson");
    sweep_cmd->add_option("--segment", segment, "values of n per sieve segment");
    sweep_cmd->add_flag("--timing", timing, "fill the seconds column with wall time");

    u64 N = 0;
    std::string checks = "all";
    u64 trials = 1000;
    auto* verify_cmd = app.add_subcommand("verify", "run checks at one N, JSON report");
    add_common(verify_cmd, c);
    verify_cmd->add_option("--n", N, "N")->required();
    verify_cmd->add_option("--checks", checks, "comma-separated check names or all");
    verify_cmd->add_option("--trials", trials, "random trials for identity and ratio checks");
    verify_cmd->add_option("--bound", bound, "sieve bound: DN or an integer >= D*N");

    u64 prime = 0;
    auto* local_cmd = app.add_subcommand("local", "local data for one prime");
    add_common(local_cmd, c);
    local_cmd->add_option("--n", N, "N")->required();
    local_cmd->add_option("--prime", prime, "prime p")->required();

    auto* oracle_cmd = app.add_subcommand("oracle-check", "pipeline vs brute-force ledger");
    add_common(oracle_cmd, c);
    oracle_cmd->add_option("--n", N, "N (at most 10000)")->required();

    int max_degree = 6;
    auto* identity_cmd = app.add_subcommand("identity", "random divided-difference trials");
    add_common(identity_cmd, c, false);
    identity_cmd->add_option("--trials", trials, "number of trials");
    identity_cmd->add_option("--max-degree", max_degree, "largest random degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    try {
        if (sweep_cmd->parsed()) {
            if (n_opt->count() == 0 && g_opt->count() == 0) throw parse_error("empty schedule", 1, 1);
            return run_sweep(c, n_list, geom, bound, format, segment, timing);
        }
        if (verify_cmd->parsed()) return run_verify(c, N, checks, trials, bound);
        if (local_cmd->parsed()) return run_local(c, N, prime);
        if (oracle_cmd->parsed()) return run_oracle_check(c, N);
        if (identity_cmd->parsed()) return run_identity(c, trials, max_degree);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const zero_discriminant& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPartial;
    }
    return kConfigError;
}
