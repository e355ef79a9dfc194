#pragma once

/**
 * @file polynomial.hpp
 * @brief Integer polynomials: evaluation, discriminant, range maxima, and the
 *        derived profile (D, ramified primes, irreducibility hint).
 */

#include "bigint.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "fp_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcmlab {

/// f(x) = sum f_i x^i with degree d >= 1 and f_d != 0.
class IntPoly {
public:
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
    }

    IntPoly(std::initializer_list<long> coeffs) : IntPoly(std::vector<Int>(coeffs.begin(), coeffs.end())) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const Int& leading() const { return coeffs_.back(); }
    std::span<const Int> coeffs() const { return coeffs_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Symbolic form, e.g. "2*x^3 - x + 7".
    std::string to_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Int mag = abs(c);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = (mag == 1);
            if (i == 0 || !unit) out += mag.get_str();
            if (i >= 1) {
                if (!unit) out += "*";
                out += "x";
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Int> coeffs_;
};

/// Horner evaluation; exact at every input.
inline Int eval(const IntPoly& f, const Int& n) {
    Int acc = 0;
    const auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * n + *it;
    return acc;
}

inline Int eval(const IntPoly& f, long n) { return eval(f, Int(n)); }

namespace detail {

using dense = std::vector<Int>;

inline void trim(dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const dense& a) { return static_cast<int>(a.size()) - 1; }

inline dense derivative(std::span<const Int> a) {
    dense r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

inline Int eval_dense(const dense& a, const Int& x) {
    Int acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Int content(const dense& a) {
    Int g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline dense pseudo_rem(dense a, const dense& b) {
    const int db = deg(b);
    const Int& lb = b.back();
    int e = deg(a) - db + 1;
    while (!a.empty() && deg(a) >= db) {
        const Int la = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(shift + i)] -= la * b[static_cast<std::size_t>(i)];
        trim(a);
        --e;
    }
    const Int scale = pow_ui(lb, static_cast<unsigned long>(std::max(e, 0)));
    for (auto& c : a) c *= scale;
    return a;
}

/// Resultant by the subresultant PRS (Collins/Brown), exact over Z.
inline Int resultant(dense a, dense b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -1;
    }
    if (deg(b) == 0) return s * pow_ui(b[0], static_cast<unsigned long>(deg(a)));
    const Int ca = content(a), cb = content(b);
    for (auto& c : a) c /= ca;
    for (auto& c : b) c /= cb;
    const Int t = pow_ui(ca, static_cast<unsigned long>(deg(b))) * pow_ui(cb, static_cast<unsigned long>(deg(a)));
    Int g = 1, h = 1;
    for (;;) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
        dense r = pseudo_rem(a, b);
        a = std::move(b);
        const Int divisor = g * pow_ui(h, static_cast<unsigned long>(delta));
        for (auto& c : r) c /= divisor;
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0) {
            h = pow_ui(g, static_cast<unsigned long>(delta)) / pow_ui(h, static_cast<unsigned long>(delta - 1));
        }
        if (b.empty()) return 0;
        if (deg(b) == 0) break;
    }
    // h <- lc(b)^deg(a) / h^(deg(a) - 1)
    const int da = deg(a);
    Int hf = pow_ui(b.back(), static_cast<unsigned long>(da));
    if (da >= 1) {
        hf /= pow_ui(h, static_cast<unsigned long>(da - 1));
    }
    return s * t * hf;
}

}  // namespace detail

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / f_d.
inline Int discriminant(const IntPoly& f) {
    const int d = f.degree();
    if (d == 1) return 1;
    detail::dense a(f.coeffs().begin(), f.coeffs().end());
    Int res = detail::resultant(a, detail::derivative(f.coeffs()));
    Int disc = res / f.leading();
    if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

namespace detail {

inline int sign_at(const dense& g, const Int& x) { return sgn(eval_dense(g, x)); }

/**
 * Integers s in [lo, hi] such that every real root of g in [lo, hi] lies in
 * some [s, s+1]. Recurses on g' to split the range into monotone pieces, then
 * bisects sign changes over integers.
 */
inline std::set<Int> root_brackets(const dense& g, const Int& lo, const Int& hi) {
    std::set<Int> out;
    if (deg(g) <= 0 || lo > hi) return out;
    std::set<Int> inner = root_brackets(derivative(g), lo, hi);
    std::set<Int> cuts{lo, hi};
    for (const auto& c : inner) {
        out.insert(c);
        cuts.insert(c);
        if (c + 1 <= hi) cuts.insert(c + 1);
    }
    std::vector<Int> pts(cuts.begin(), cuts.end());
    for (const auto& pt : pts) {
        if (sign_at(g, pt) == 0) out.insert(pt);
    }
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        Int a = pts[k], b = pts[k + 1];
        int sa = sign_at(g, a), sb = sign_at(g, b);
        if (sa == 0 || sb == 0 || sa == sb) continue;
        // g monotone on (a, b) unless [a, b] is a unit bracket already recorded
        while (b - a > 1) {
            Int mid = (a + b) / 2;
            int sm = sign_at(g, mid);
            if (sm == 0) {
                out.insert(mid);
                break;
            }
            if (sm == sa) {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.insert(a);
    }
    return out;
}

}  // namespace detail

/// max_{1 <= n <= N} |f(n)|, from endpoints and integers bracketing roots of f'.
inline Int max_abs_on_range(const IntPoly& f, const Int& N) {
    if (N < 1) throw std::invalid_argument("max_abs_on_range requires N >= 1");
    std::set<Int> candidates{Int(1), N};
    for (const auto& s : detail::root_brackets(detail::derivative(f.coeffs()), Int(1), N)) {
        candidates.insert(s);
        if (s + 1 <= N) candidates.insert(s + 1);
    }
    Int best = 0;
    for (const auto& n : candidates) best = std::max(best, Int(abs(eval(f, n))));
    return best;
}

/// Integers n in [lo, hi] with f(n) = 0, ascending.
inline std::vector<Int> integer_zeros(const IntPoly& f, const Int& lo, const Int& hi) {
    std::vector<Int> out;
    if (lo > hi) return out;
    detail::dense c(f.coeffs().begin(), f.coeffs().end());
    std::set<Int> hits;
    for (const auto& s : detail::root_brackets(c, lo, hi)) {
        for (const Int& n : {s, Int(s + 1)}) {
            if (n <= hi && eval(f, n) == 0) hits.insert(n);
        }
    }
    out.assign(hits.begin(), hits.end());
    return out;
}

/// D = 1 + d*|f_d|, the boundary constant of the linear prime zone.
inline Int linear_zone_constant(const IntPoly& f) { return 1 + f.degree() * abs(f.leading()); }

enum class irreducibility { proved, assumed, unknown, reducible };

inline std::string_view to_string(irreducibility h) {
    switch (h) {
        case irreducibility::proved: return "proved";
        case irreducibility::assumed: return "assumed";
        case irreducibility::unknown: return "unknown";
        case irreducibility::reducible: return "reducible";
    }
    return "unknown";
}

struct PolyProfile {
    Int disc;
    Int D;
    std::vector<Int> ramified_primes;
    irreducibility irreducible_hint = irreducibility::unknown;
    /// Prime p with f mod p irreducible, when one was found.
    std::optional<unsigned long> certifying_prime;
};

inline fp::poly reduce_mod(const IntPoly& f, u64 p) {
    fp::poly r;
    for (const auto& c : f.coeffs()) r.push_back(mod_u64(c, p));
    fp::trim(r);
    return r;
}

namespace detail {

inline constexpr std::size_t kMaxDivisors = 1 << 16;

/// Positive divisors of |n| > 0, or nullopt if there are too many to list.
inline std::optional<std::vector<Int>> divisors(const Int& n) {
    std::vector<Int> divs{1};
    if (abs(n) == 1) return divs;
    for (const auto& [p, e] : factor_cofactor(abs(n))) {
        const std::size_t base = divs.size();
        if (base * (e + 1) > kMaxDivisors) return std::nullopt;
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// true / false when decided, nullopt when the divisor lists are too long.
inline std::optional<bool> has_rational_root(const IntPoly& f) {
    if (f.coeff(0) == 0) return true;
    auto num = divisors(f.coeff(0));
    auto den = divisors(f.leading());
    if (!num || !den) return std::nullopt;
    const int d = f.degree();
    for (const auto& b : *den) {
        for (const auto& a0 : *num) {
            if (gcd(a0, b) != 1) continue;
            for (const Int& a : {a0, Int(-a0)}) {
                // homogeneous evaluation sum f_i a^i b^(d-i)
                Int acc = 0, apow = 1;
                for (int i = 0; i <= d; ++i) {
                    acc += f.coeff(i) * apow * pow_ui(b, static_cast<unsigned long>(d - i));
                    apow *= a;
                }
                if (acc == 0) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

/**
 * Discriminant, D, ramified primes, and an irreducibility hint.
 *
 * The hint is `proved` when f mod p is irreducible of full degree for some
 * prime p < 200, or when d <= 3 and f has no rational root. A rational root
 * gives `reducible`. Otherwise degree >= 4 polynomials are `assumed`.
 */
inline PolyProfile profile(const IntPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("profile requires degree >= 2");
    PolyProfile out;
    out.disc = discriminant(f);
    if (out.disc == 0) throw zero_discriminant("discriminant of " + f.to_string() + " is 0 (not squarefree)");
    out.D = linear_zone_constant(f);
    if (abs(out.disc) > 1) {
        for (const auto& [p, e] : factor_cofactor(abs(out.disc))) out.ramified_primes.push_back(p);
    }
    const int d = f.degree();
    for (unsigned long p = 2; p < 200; ++p) {
        if (!is_prime_u64(p)) continue;
        fp::poly fp_f = reduce_mod(f, p);
        if (fp::degree(fp_f) != d) continue;
        if (fp::is_irreducible(fp_f, p)) {
            out.certifying_prime = p;
            out.irreducible_hint = irreducibility::proved;
            return out;
        }
    }
    auto rational = detail::has_rational_root(f);
    if (!rational) {
        out.irreducible_hint = irreducibility::unknown;
    } else if (*rational) {
        out.irreducible_hint = irreducibility::reducible;
    } else {
        out.irreducible_hint = d <= 3 ? irreducibility::proved : irreducibility::assumed;
    }
    return out;
}

namespace detail {

struct cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, 1, pos + 1); }

    Int number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(std::string(text.substr(start, pos - start)));
    }
};

inline IntPoly parse_list(std::string_view text) {
    cursor cur{text};
    std::vector<Int> coeffs;
    for (;;) {
        int sign = 1;
        char c = cur.peek();
        if (c == '-' || c == '+') {
            sign = (c == '-') ? -1 : 1;
            ++cur.pos;
        }
        coeffs.push_back(sign * cur.number());
        if (cur.done()) break;
        if (cur.peek() != ',') cur.fail("expected ','");
        ++cur.pos;
    }
    try {
        return IntPoly(std::move(coeffs));
    } catch (const std::invalid_argument&) {
        throw parse_error("polynomial must have degree >= 1", 1, 1);
    }
}

inline IntPoly parse_symbolic(std::string_view text) {
    cursor cur{text};
    std::map<int, Int> terms;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        Int coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = cur.number();
            have_coef = true;
            if (cur.peek() == '*') {
                ++cur.pos;
                if (cur.peek() != 'x') cur.fail("expected 'x' after '*'");
            }
        }
        int power = 0;
        if (cur.peek() == 'x') {
            ++cur.pos;
            power = 1;
            if (cur.peek() == '^') {
                ++cur.pos;
                Int k = cur.number();
                if (!k.fits_sint_p() || k > 4096) cur.fail("exponent too large");
                power = static_cast<int>(k.get_si());
            }
        } else if (!have_coef) {
            cur.fail("expected coefficient or 'x'");
        }
        terms[power] += sign * coef;
    }
    if (terms.empty()) cur.fail("empty polynomial");
    std::vector<Int> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
    for (const auto& [k, v] : terms) coeffs[static_cast<std::size_t>(k)] = v;
    try {
        return IntPoly(std::move(coeffs));
    } catch (const std::invalid_argument&) {
        throw parse_error("polynomial must have degree >= 1", 1, 1);
    }
}

}  // namespace detail

/**
 * Parses either an ascending coefficient list "f0,f1,...,fd" or a symbolic
 * sum of "c*x^k" terms such as "x^3 - 2*x + 7". Throws parse_error with the
 * offending column.
 */
inline IntPoly parse_poly(std::string_view text) {
    if (text.find('x') == std::string_view::npos) return detail::parse_list(text);
    return detail::parse_symbolic(text);
}

}  // namespace lcmlab
