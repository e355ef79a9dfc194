#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcmlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// f has a repeated factor; discriminant-based reasoning does not apply.
struct zero_discriminant : error {
    using error::error;
};

/// Raised when a requested level or size exceeds its cap. Lifting loops treat
/// this as a stop signal, not a failure.
struct cap_exceeded : error {
    using error::error;
};

/// Analytic per-prime totals disagree with the exponents removed by the
/// segmented pass. Always a bug.
struct ledger_mismatch : error {
    using error::error;
};

struct factor_timeout : error {
    using error::error;
};

struct non_integral : error {
    using error::error;
};

struct precondition_unmet : error {
    using error::error;
};

/// Polynomial or schedule text that does not parse. Carries a 1-based column.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace lcmlab
