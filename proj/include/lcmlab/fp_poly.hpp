#pragma once

/**
 * @file fp_poly.hpp
 * @brief Dense univariate polynomials over F_p for word-sized primes p.
 *
 * Coefficients are ascending and always trimmed, so the zero polynomial is
 * the empty vector. Used for root extraction and irreducibility certificates.
 */

#include "primes.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lcmlab::fp {

using poly = std::vector<u64>;

inline void trim(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const poly& a) { return static_cast<int>(a.size()) - 1; }

inline poly sub(poly a, const poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
    trim(a);
    return a;
}

inline poly mul(const poly& a, const poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

/// Remainder of a modulo nonzero m.
inline poly rem(poly a, const poly& m, u64 p) {
    const int dm = degree(m);
    const u64 inv_lead = inv_mod(m.back(), p);
    for (int da = degree(a); da >= dm; da = degree(a)) {
        const u64 q = mul_mod(a.back(), inv_lead, p);
        const int shift = da - dm;
        for (int i = 0; i <= dm; ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(q, m[i], p), p);
        trim(a);
    }
    return a;
}

/// Quotient of a by nonzero m (remainder discarded).
inline poly div(poly a, const poly& m, u64 p) {
    const int dm = degree(m);
    if (degree(a) < dm) return {};
    poly q(a.size() - m.size() + 1, 0);
    const u64 inv_lead = inv_mod(m.back(), p);
    for (int da = degree(a); da >= dm; da = degree(a)) {
        const u64 c = mul_mod(a.back(), inv_lead, p);
        const int shift = da - dm;
        q[shift] = c;
        for (int i = 0; i <= dm; ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(c, m[i], p), p);
        trim(a);
    }
    trim(q);
    return q;
}

inline poly make_monic(poly a, u64 p) {
    if (a.empty()) return a;
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
    return a;
}

inline poly gcd(poly a, poly b, u64 p) {
    while (!b.empty()) {
        a = rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return make_monic(std::move(a), p);
}

inline poly mul_mod_poly(const poly& a, const poly& b, const poly& m, u64 p) { return rem(mul(a, b, p), m, p); }

/// base^e reduced modulo m.
inline poly pow_mod_poly(poly base, u64 e, const poly& m, u64 p) {
    poly r{1 % p};
    r = rem(r, m, p);
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mul_mod_poly(r, base, m, p);
        e >>= 1;
        if (e) base = mul_mod_poly(base, base, m, p);
    }
    return r;
}

inline u64 eval(const poly& a, u64 x, u64 p) {
    u64 acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), *it, p);
    return acc;
}

/// Ben-Or: f of degree d is irreducible iff gcd(x^{p^k} - x, f) = 1 for k <= d/2.
inline bool is_irreducible(const poly& f, u64 p) {
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const poly x{0, 1};
    poly xpk = rem(x, f, p);
    for (int k = 1; k <= d / 2; ++k) {
        xpk = pow_mod_poly(xpk, p, f, p);
        if (degree(gcd(f, sub(xpk, x, p), p)) > 0) return false;
    }
    return true;
}

namespace detail {

/// Roots of a monic g that splits into distinct linear factors over F_p, p odd.
inline void split_linear(const poly& g, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
    const int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(sub_mod(0, g[0], p));
        return;
    }
    for (;;) {
        const u64 a = rng() % p;
        poly h = pow_mod_poly(poly{a, 1}, (p - 1) / 2, g, p);
        h = sub(std::move(h), poly{1}, p);
        poly factor = gcd(g, h, p);
        const int df = degree(factor);
        if (df > 0 && df < d) {
            split_linear(factor, p, rng, out);
            split_linear(div(g, factor, p), p, rng, out);
            return;
        }
    }
}

}  // namespace detail

/**
 * Distinct roots of nonzero f over F_p for odd p, by equal-degree splitting
 * of g = gcd(x^p - x, f). The rng drives the choice of splitting shifts; the
 * returned set does not depend on it.
 */
inline std::vector<u64> roots_by_splitting(const poly& f, u64 p, std::mt19937_64& rng) {
    std::vector<u64> out;
    poly monic = make_monic(f, p);
    if (degree(monic) < 1) return out;
    const poly x{0, 1};
    poly xp = pow_mod_poly(x, p, monic, p);
    poly g = gcd(monic, sub(std::move(xp), x, p), p);
    detail::split_linear(g, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lcmlab::fp
