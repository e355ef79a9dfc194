#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer helpers on top of GMP's mpz_class.
 */

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace lcmlab {

using Int = mpz_class;
using Rational = mpq_class;

inline Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline Int from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    // two's complement magnitude avoids overflow at INT64_MIN
    return -from_u64(~static_cast<std::uint64_t>(v) + 1);
}

inline bool fits_u64(const Int& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& v) {
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return count == 0 ? 0 : out;
}

/// Residue of v modulo m in [0, m).
inline std::uint64_t mod_u64(const Int& v, std::uint64_t m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

/// Natural log of |v| for v != 0, accurate to double precision at any size.
inline double log_abs(const Int& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Strips every factor p from v; returns the multiplicity removed.
inline unsigned remove_factor(Int& v, const Int& p) {
    return static_cast<unsigned>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()));
}

inline std::string to_string(const Int& v) { return v.get_str(10); }

}  // namespace lcmlab
