#pragma once

/**
 * @file io.hpp
 * @brief Sweep CSV/NDJSON rows, JSON documents for ledgers and reports, and
 *        schedule parsing.
 *
 * CSV floats use 17 significant digits so every double round-trips. Output
 * never depends on the worker count.
 */

#include "aggregate.hpp"
#include "analysis.hpp"
#include "errors.hpp"
#include "sieve.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlab::io {

inline constexpr int kSchemaVersion = 1;

inline constexpr std::string_view kCsvColumns =
    "N,log_Q,log_QS,log_QLI,log_QL,log_L,log_rad,ratio_L,ratio_rad,ratio_QS,n_primes,n_squareful,n_repeated,seconds";

inline std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Leading comment line of a sweep CSV: everything needed to reproduce it.
inline std::string csv_preamble(const IntPoly& f, std::uint64_t seed, std::string_view bound_rule) {
    return "# lcmlab sweep schema=" + std::to_string(kSchemaVersion) + " poly=\"" + f.to_string() +
           "\" seed=" + std::to_string(seed) + " bound=" + std::string(bound_rule) + " log=natural\n";
}

inline std::string csv_row(const SweepRecord& r) {
    std::string s = std::to_string(r.N);
    for (double v : {r.log_Q, r.log_QS, r.log_QLI, r.log_QL, r.log_L, r.log_rad, r.ratio_L, r.ratio_rad, r.ratio_QS}) {
        s += ',' + fmt_double(v);
    }
    for (u64 v : {r.n_primes, r.n_squareful, r.n_repeated}) s += ',' + std::to_string(v);
    s += ',' + fmt_double(r.seconds);
    return s;
}

/// Parses one data row written by csv_row.
inline SweepRecord parse_csv_row(std::string_view line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in{std::string(line)};
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (cells.size() != 14) throw parse_error("expected 14 columns", 1, 1);
    auto num = [](const std::string& c) { return c == "nan" ? kNaN : std::stod(c); };
    SweepRecord r;
    r.N = std::stoull(cells[0]);
    double* fields[] = {&r.log_Q, &r.log_QS, &r.log_QLI, &r.log_QL, &r.log_L, &r.log_rad, &r.ratio_L, &r.ratio_rad, &r.ratio_QS};
    for (std::size_t i = 0; i < 9; ++i) *fields[i] = num(cells[i + 1]);
    r.n_primes = std::stoull(cells[10]);
    r.n_squareful = std::stoull(cells[11]);
    r.n_repeated = std::stoull(cells[12]);
    r.seconds = num(cells[13]);
    return r;
}

inline nlohmann::ordered_json number_or_null(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

inline nlohmann::ordered_json to_json(const SweepRecord& r) {
    return {{"N", r.N},
            {"log_Q", number_or_null(r.log_Q)},
            {"log_QS", number_or_null(r.log_QS)},
            {"log_QLI", number_or_null(r.log_QLI)},
            {"log_QL", number_or_null(r.log_QL)},
            {"log_L", number_or_null(r.log_L)},
            {"log_rad", number_or_null(r.log_rad)},
            {"ratio_L", number_or_null(r.ratio_L)},
            {"ratio_rad", number_or_null(r.ratio_rad)},
            {"ratio_QS", number_or_null(r.ratio_QS)},
            {"n_primes", r.n_primes},
            {"n_squareful", r.n_squareful},
            {"n_repeated", r.n_repeated},
            {"seconds", r.seconds}};
}

inline nlohmann::ordered_json to_json(const SweepOutcome& o) {
    if (o.record) return to_json(*o.record);
    return {{"N", o.N}, {"error", o.error}};
}

inline nlohmann::ordered_json to_json(const PrimeLocalData& d) {
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (const auto& [n, v] : d.hits) hits.push_back({n, v});
    return {{"p", to_string(d.p)},     {"alpha", d.alpha}, {"max_exp", d.max_exp},
            {"hit_count", d.hit_count}, {"layers", d.layers}, {"hits", hits}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) violations.push_back({{"subject", v.subject}, {"observed", v.observed}, {"bound", v.bound}});
    nlohmann::ordered_json constants = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.empirical_constants) constants[k] = number_or_null(v);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return {{"check_name", r.check_name},
            {"poly", r.poly},
            {"N", r.N},
            {"parameters", params},
            {"status", std::string(to_string(r.status))},
            {"asserted", r.asserted},
            {"violations", violations},
            {"empirical_constants", constants}};
}

/**
 * Comma-separated list of positive integers, strictly increasing. Throws
 * parse_error with the column of the offending entry.
 */
inline std::vector<u64> parse_schedule(std::string_view text) {
    std::vector<u64> out;
    std::size_t pos = 0;
    bool any = false;
    for (char c : text) any |= !std::isspace(static_cast<unsigned char>(c));
    if (!any) throw parse_error("empty schedule", 1, 1);
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        std::size_t lead = 0;
        while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
        std::size_t end = item.size();
        while (end > lead && std::isspace(static_cast<unsigned char>(item[end - 1]))) --end;
        item = item.substr(lead, end - lead);
        const std::size_t column = pos + lead + 1;
        if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) {
            throw parse_error("expected positive integer in schedule", 1, column);
        }
        if (item.size() > 18) throw parse_error("schedule value too large", 1, column);
        const u64 v = std::stoull(std::string(item));
        if (v == 0) throw parse_error("schedule values must be >= 1", 1, column);
        if (!out.empty() && v <= out.back()) throw parse_error("schedule must be strictly increasing", 1, column);
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

/// Geometric schedule round(start * ratio^k) <= end, duplicates dropped.
inline std::vector<u64> geometric_schedule(u64 start, u64 end, double ratio) {
    if (start == 0 || end < start || !(ratio > 1.0)) {
        throw std::invalid_argument("geometric schedule needs 1 <= start <= end and ratio > 1");
    }
    std::vector<u64> out;
    for (double x = static_cast<double>(start); x < static_cast<double>(end) + 0.5; x *= ratio) {
        const u64 v = static_cast<u64>(std::llround(x));
        if (v > end) break;
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    return out;
}

}  // namespace lcmlab::io
