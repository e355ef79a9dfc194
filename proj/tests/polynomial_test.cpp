#include "lcmlab/polynomial.hpp"
#include "test_polys.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lcmlab {
namespace {

// Oracle: discriminant from the Sylvester matrix of f and f', with a
// fraction-free Bareiss determinant. Shares nothing with the PRS route.
Int sylvester_resultant(const std::vector<Int>& a, const std::vector<Int>& b) {
    const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    const int size = m + n;
    std::vector<std::vector<Int>> M(size, std::vector<Int>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = a[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = b[n - k];
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < size; ++r)
                if (M[r][k] != 0) swap = r;
            if (swap < 0) return 0;
            std::swap(M[k], M[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[size - 1][size - 1];
}

Int oracle_discriminant(const IntPoly& f) {
    std::vector<Int> a(f.coeffs().begin(), f.coeffs().end()), b;
    for (std::size_t i = 1; i < a.size(); ++i) b.push_back(a[i] * static_cast<unsigned long>(i));
    const int d = f.degree();
    Int disc = sylvester_resultant(a, b) / f.leading();
    return (d * (d - 1) / 2) % 2 ? Int(-disc) : disc;
}

TEST(Eval, Examples) {
    EXPECT_EQ(eval(IntPoly{1, 0, 1}, 3L), 10);
    EXPECT_EQ(eval(IntPoly{1, 0, 1}, 0L), 1);
    EXPECT_EQ(eval(IntPoly{7, -1, 0, 2}, -2L), -7);
}

TEST(Eval, HornerMatchesPowerSum) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-1000, 1000), arg(-1000, 1000);
    std::uniform_int_distribution<int> deg(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        IntPoly f(c);
        const Int n = arg(rng);
        Int direct = 0;
        for (std::size_t i = 0; i < c.size(); ++i) direct += c[i] * pow_ui(n, i);
        EXPECT_EQ(eval(f, n), direct);
    }
}

TEST(Eval, NoOverflowAtLargeInput) {
    IntPoly f{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    const Int n("100000000000");
    EXPECT_EQ(eval(f, n), pow_ui(n, 10) + 1);
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(IntPoly{1, 0, 1}), -4);
    EXPECT_EQ(discriminant(IntPoly{1, 1, 1}), -3);
    EXPECT_EQ(discriminant(IntPoly{2, 0, 0, 1}), -108);
    EXPECT_EQ(discriminant(IntPoly{1, 2, 3}), -8);
}

TEST(Discriminant, CubicClosedForm) {
    // x^3 + c: disc = -27 c^2
    for (long c : {1L, 2L, -5L, 17L}) EXPECT_EQ(discriminant(IntPoly{c, 0, 0, 1}), -27 * c * c);
}

TEST(Discriminant, MatchesSylvesterOracle) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-30, 30);
    std::uniform_int_distribution<int> deg(2, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Int> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = -3;
        IntPoly f(c);
        EXPECT_EQ(discriminant(f), oracle_discriminant(f)) << f.to_string();
    }
    for (const auto& f : testing::property_polys()) EXPECT_EQ(discriminant(f), oracle_discriminant(f));
}

TEST(Discriminant, ZeroForRepeatedFactor) {
    EXPECT_EQ(discriminant(IntPoly{1, -2, 1}), 0);          // (x-1)^2
    EXPECT_EQ(discriminant(IntPoly{0, 0, 1, 1}), 0);        // x^2 (x+1)
}

TEST(Discriminant, VanishesModPExactlyWhenFAndDerivativeShareAFactor) {
    for (const auto& f : testing::property_polys()) {
        const Int disc = discriminant(f);
        for (u64 p = 2; p < 100; ++p) {
            if (!is_prime_u64(p) || mod_u64(f.leading(), p) == 0) continue;
            // exhaustive scan: a root r with f(r) = f'(r) = 0 mod p forces p | disc
            bool repeated_root = false;
            for (u64 r = 0; r < p; ++r) {
                Int fr = eval(f, from_u64(r));
                Int dr = 0;
                for (int i = f.degree(); i >= 1; --i) dr = dr * from_u64(r) + f.coeff(i) * i;
                if (mod_u64(fr, p) == 0 && mod_u64(dr, p) == 0) repeated_root = true;
            }
            const bool divides = mod_u64(disc, p) == 0;
            if (repeated_root) {
                EXPECT_TRUE(divides) << f.to_string() << " p=" << p;
            }
            fp::poly fbar = reduce_mod(f, p), dbar;
            for (int i = 1; i <= f.degree(); ++i) dbar.push_back(mod_u64(f.coeff(i) * i, p));
            fp::trim(dbar);
            const bool shared = dbar.empty() || fp::degree(fp::gcd(fbar, dbar, p)) > 0;
            EXPECT_EQ(divides, shared) << f.to_string() << " p=" << p;
        }
    }
}

Int brute_max(const IntPoly& f, long N) {
    Int best = 0;
    for (long n = 1; n <= N; ++n) best = std::max(best, Int(abs(eval(f, n))));
    return best;
}

TEST(MaxAbsOnRange, Examples) {
    EXPECT_EQ(max_abs_on_range(IntPoly{1, 0, 1}, Int(10)), 101);
    EXPECT_EQ(max_abs_on_range(IntPoly{0, -10, 1}, Int(10)), 25);
    EXPECT_EQ(max_abs_on_range(IntPoly{2, 0, 0, 1}, Int(4)), 66);
}

TEST(MaxAbsOnRange, MatchesFullScan) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> coef(-60, 60);
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_int_distribution<long> range(1, 80);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Int> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        IntPoly f(c);
        const long N = range(rng);
        EXPECT_EQ(max_abs_on_range(f, Int(N)), brute_max(f, N)) << f.to_string() << " N=" << N;
    }
    // interior extrema with roots of f' away from integers
    IntPoly wiggle{0, 300, -45, 2};  // 2x^3 - 45x^2 + 300x
    EXPECT_EQ(max_abs_on_range(wiggle, Int(30)), brute_max(wiggle, 30));
}

TEST(IntegerZeros, FindsAllInRange) {
    EXPECT_EQ(integer_zeros(IntPoly{-1, 0, 1}, Int(1), Int(10)), std::vector<Int>{1});
    EXPECT_EQ(integer_zeros(IntPoly{3, -7, 0, 4}, Int(1), Int(10)), std::vector<Int>{1});
    EXPECT_TRUE(integer_zeros(IntPoly{1, 0, 1}, Int(1), Int(100)).empty());
    // (x-3)(x-7)(x-50)
    IntPoly g{-1050, 521, -60, 1};
    EXPECT_EQ(integer_zeros(g, Int(1), Int(40)), (std::vector<Int>{3, 7}));
}

TEST(Profile, Examples) {
    auto a = profile(IntPoly{1, 0, 1});
    EXPECT_EQ(a.D, 3);
    EXPECT_EQ(a.ramified_primes, std::vector<Int>{2});
    EXPECT_EQ(a.disc, -4);

    auto b = profile(IntPoly{2, 0, 0, 1});
    EXPECT_EQ(b.D, 4);
    EXPECT_EQ(b.ramified_primes, (std::vector<Int>{2, 3}));

    auto c = profile(IntPoly{1, 2, 3});
    EXPECT_EQ(c.D, 7);
    EXPECT_EQ(c.ramified_primes, std::vector<Int>{2});
}

TEST(Profile, DIsAtLeastThree) {
    for (const auto& f : testing::property_polys()) {
        auto prof = profile(f);
        EXPECT_GE(prof.D, 3);
        EXPECT_EQ(prof.D, 1 + f.degree() * abs(f.leading()));
        for (const auto& p : prof.ramified_primes) EXPECT_TRUE(mpz_divisible_p(prof.disc.get_mpz_t(), p.get_mpz_t()));
    }
}

TEST(Profile, ZeroDiscriminantIsFatal) {
    EXPECT_THROW(profile(IntPoly{1, -2, 1}), zero_discriminant);
}

TEST(Profile, IrreducibilityHint) {
    EXPECT_EQ(profile(IntPoly{1, 0, 1}).irreducible_hint, irreducibility::proved);
    EXPECT_EQ(profile(IntPoly{2, 0, 0, 1}).irreducible_hint, irreducibility::proved);
    EXPECT_EQ(profile(IntPoly{-1, 0, 1}).irreducible_hint, irreducibility::reducible);
    EXPECT_EQ(profile(IntPoly{3, -7, 0, 4}).irreducible_hint, irreducibility::reducible);
    // x^4 + 1 is reducible mod every prime yet irreducible over Q
    EXPECT_EQ(profile(IntPoly{1, 0, 0, 0, 1}).irreducible_hint, irreducibility::assumed);
    // (x^2+x+1)(x^3-x^2+1): no rational root, no certifying prime
    EXPECT_EQ(profile(IntPoly{1, 1, 0, 0, 0, 1}).irreducible_hint, irreducibility::assumed);
}

TEST(Parse, CoefficientList) {
    EXPECT_EQ(parse_poly("1,0,1"), (IntPoly{1, 0, 1}));
    EXPECT_EQ(parse_poly(" 7, -1, 0, 2 "), (IntPoly{7, -1, 0, 2}));
}

TEST(Parse, Symbolic) {
    EXPECT_EQ(parse_poly("x^2+1"), (IntPoly{1, 0, 1}));
    EXPECT_EQ(parse_poly("x^3 - 2*x + 7"), (IntPoly{7, -2, 0, 1}));
    EXPECT_EQ(parse_poly("2*x^3 - x + 7"), (IntPoly{7, -1, 0, 2}));
    EXPECT_EQ(parse_poly("-x^2 + 3x - 1"), (IntPoly{-1, 3, -1}));
    EXPECT_EQ(parse_poly("x^2 + x + x + 1"), (IntPoly{1, 2, 1}));
    const IntPoly big = parse_poly("123456789012345678901234567890*x^2 + 1");
    EXPECT_EQ(big.leading(), Int("123456789012345678901234567890"));
}

TEST(Parse, RoundTripsThroughToString) {
    for (const auto& f : testing::property_polys()) EXPECT_EQ(parse_poly(f.to_string()), f) << f.to_string();
}

TEST(Parse, ErrorsCarryColumn) {
    try {
        parse_poly("x^2 + + 1");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line, 1u);
        EXPECT_EQ(e.column, 7u);
    }
    EXPECT_THROW(parse_poly("1,2,"), parse_error);
    EXPECT_THROW(parse_poly("5"), parse_error);
    EXPECT_THROW(parse_poly("x^2 - x^2 + 3"), parse_error);
    EXPECT_THROW(parse_poly("x^2 y"), parse_error);
}

}  // namespace
}  // namespace lcmlab
