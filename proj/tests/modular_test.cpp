#include "lcmlab/modular.hpp"
#include "test_polys.hpp"

#include <gtest/gtest.h>

namespace lcmlab {
namespace {

// Oracle: exhaustive scan of residues with exact integer evaluation.
std::vector<u64> scan_roots(const IntPoly& f, u64 m) {
    std::vector<u64> out;
    for (u64 r = 0; r < m; ++r)
        if (mod_u64(eval(f, from_u64(r)), m) == 0) out.push_back(r);
    return out;
}

TEST(RootsModP, Examples) {
    EXPECT_EQ(roots_mod_p(IntPoly{1, 0, 1}, 5).roots, (std::vector<u64>{2, 3}));
    EXPECT_TRUE(roots_mod_p(IntPoly{1, 0, 1}, 7).roots.empty());
    EXPECT_EQ(roots_mod_p(IntPoly{1, 0, 1}, 2).roots, std::vector<u64>{1});
    EXPECT_EQ(roots_mod_p(IntPoly{1, 1, 1}, 3).roots, std::vector<u64>{1});
}

TEST(RootsModP, SimpleFlag) {
    auto a = roots_mod_p(IntPoly{1, 0, 1}, 2);
    EXPECT_FALSE(a.simple[0]);
    auto b = roots_mod_p(IntPoly{1, 0, 1}, 5);
    EXPECT_TRUE(b.simple[0] && b.simple[1]);
}

TEST(RootsModP, MatchesScanForSmallPrimes) {
    for (const auto& f : testing::property_polys())
        for (u64 p = 2; p < 400; ++p) {
            if (!is_prime_u64(p)) continue;
            EXPECT_EQ(roots_mod_p(f, p).roots, scan_roots(f, p)) << f.to_string() << " p=" << p;
        }
}

TEST(RootsModP, SplittingAgreesWithScanAboveThreshold) {
    // primes just above the scan threshold go through the gcd/splitting path
    for (const auto& f : testing::property_polys()) {
        int checked = 0;
        for (u64 p = kRootScanThreshold + 1; checked < 25; ++p) {
            if (!is_prime_u64(p)) continue;
            ++checked;
            EXPECT_EQ(roots_mod_p(f, p, 7).roots, scan_roots(f, p)) << f.to_string() << " p=" << p;
        }
    }
}

TEST(RootsModP, SeedDoesNotChangeResult) {
    IntPoly f{1, 0, 0, 0, 0, 0, 1};  // x^6 + 1
    for (u64 p : {1000003ull, 998244353ull, 4294967311ull}) {
        auto a = roots_mod_p(f, p, 1).roots;
        for (std::uint64_t seed : {2ull, 99ull, 123456789ull}) EXPECT_EQ(roots_mod_p(f, p, seed).roots, a);
        for (u64 r : a) EXPECT_EQ(mod_u64(eval(f, from_u64(r)), p), 0u);
    }
}

TEST(RootsModP, CountAtLargePrimeMatchesCriterion) {
    // x^2 + 1 has two roots mod p iff p = 1 mod 4
    IntPoly f{1, 0, 1};
    for (u64 p : {1000033ull, 1000037ull, 1000039ull}) {
        auto roots = roots_mod_p(f, p).roots;
        EXPECT_EQ(roots.size(), p % 4 == 1 ? 2u : 0u) << p;
    }
}

TEST(LiftRoots, Examples) {
    IntPoly f{1, 0, 1};
    auto level2 = lift_roots(f, roots_mod_p(f, 5), Int(1000));
    EXPECT_EQ(level2.modulus, 25u);
    EXPECT_EQ(level2.roots, (std::vector<u64>{7, 18}));
    // f(1) = 2 and f(3) = 10, neither divisible by 4
    EXPECT_TRUE(lift_roots(f, roots_mod_p(f, 2), Int(1000)).roots.empty());
}

TEST(LiftRoots, CapStopsLifting) {
    IntPoly f{1, 0, 1};
    EXPECT_THROW(lift_roots(f, roots_mod_p(f, 5), Int(24)), cap_exceeded);
}

TEST(LiftRoots, MatchesScanAtEveryLevel) {
    for (const auto& f : testing::property_polys()) {
        for (u64 p : {2ull, 3ull, 5ull, 7ull, 13ull, 17ull}) {
            RootSet cur = roots_mod_p(f, p);
            for (int k = 2; cur.modulus * p <= 20000; ++k) {
                cur = lift_roots(f, cur, Int(1) << 40);
                EXPECT_EQ(cur.roots, scan_roots(f, cur.modulus)) << f.to_string() << " p^" << k;
            }
        }
    }
}

TEST(LiftRoots, SimpleRootsLiftUniquely) {
    for (const auto& f : testing::property_polys()) {
        for (u64 p = 3; p < 60; ++p) {
            if (!is_prime_u64(p) || mod_u64(discriminant(f), p) == 0 || mod_u64(f.leading(), p) == 0) continue;
            RootSet cur = roots_mod_p(f, p);
            const auto n1 = cur.size();
            for (int k = 0; k < 3; ++k) {
                cur = lift_roots(f, cur, Int(1) << 62);
                EXPECT_EQ(cur.size(), n1);
            }
        }
    }
}

TEST(CountProgression, Examples) {
    EXPECT_EQ(count_progression(2, 5, 10), 2u);
    EXPECT_EQ(count_progression(3, 5, 10), 2u);
    EXPECT_EQ(count_progression(7, 25, 10), 1u);
    EXPECT_EQ(count_progression(18, 25, 10), 0u);
    EXPECT_EQ(count_progression(1, 4, 10), 3u);
    EXPECT_EQ(count_progression(0, 5, 10), 2u);
}

TEST(CountProgression, MatchesLoop) {
    for (u64 m = 1; m < 30; ++m)
        for (u64 r = 0; r < m; ++r)
            for (u64 N = 0; N < 70; ++N) {
                u64 c = 0;
                for (u64 n = 1; n <= N; ++n) c += n % m == r;
                EXPECT_EQ(count_progression(r, m, N), c);
            }
}

}  // namespace
}  // namespace lcmlab
