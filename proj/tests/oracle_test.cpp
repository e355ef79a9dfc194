#include "lcmlab/oracle.hpp"
#include "lcmlab/sieve.hpp"
#include "test_polys.hpp"

#include <gtest/gtest.h>

namespace lcmlab {
namespace {

Int lcm_by_mpz(const IntPoly& f, u64 N) {
    Int acc = 1;
    for (u64 n = 1; n <= N; ++n) {
        Int v = abs(eval(f, from_u64(n)));
        if (v != 0) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
    }
    return acc;
}

TEST(Oracle, Examples) {
    IntPoly f{1, 0, 1};
    EXPECT_EQ(oracle::naive_run(f, 3).lcm_value, 10);
    EXPECT_EQ(oracle::naive_run(f, 5).lcm_value, 2210);
    EXPECT_EQ(oracle::naive_run(f, 7).lcm_value, 408850);
    EXPECT_EQ(oracle::naive_run(f, 5).rad_value, 2210);
    EXPECT_EQ(oracle::naive_run(f, 7).rad_value, 2 * 5 * 13 * 17 * 37);
}

TEST(Oracle, CapIsEnforced) {
    EXPECT_NO_THROW(oracle::naive_run(IntPoly{1, 0, 1}, oracle::kMaxN));
    EXPECT_THROW(oracle::naive_run(IntPoly{1, 0, 1}, oracle::kMaxN + 1), cap_exceeded);
}

TEST(Oracle, LcmMatchesMpz) {
    for (const auto& f : testing::property_polys())
        for (u64 N : {1ull, 10ull, 150ull}) EXPECT_EQ(oracle::naive_run(f, N).lcm_value, lcm_by_mpz(f, N)) << f.to_string();
}

TEST(Oracle, AgreesWithSievedLedger) {
    for (const auto& f : testing::property_polys()) {
        for (u64 N : {5ull, 64ull, 400ull}) {
            auto naive = oracle::naive_run(f, N);
            auto sieved = build_ledger(f, N);
            EXPECT_EQ(naive.ledger.entries, sieved.entries) << f.to_string() << " N=" << N;
            EXPECT_EQ(naive.ledger.skipped_zero_count, sieved.skipped_zero_count);
        }
    }
}

TEST(Oracle, AgreesAtTheCap) {
    for (const auto& f : testing::acceptance_polys()) {
        EXPECT_EQ(oracle::naive_run(f, 2000).ledger.entries, build_ledger(f, 2000).entries) << f.to_string();
    }
}

}  // namespace
}  // namespace lcmlab
