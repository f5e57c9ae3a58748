#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hexdrop/random_stream.hpp"

namespace hexdrop {
namespace {

TEST(RandomStream, SameSeedSameSequence) {
    RandomStream a(99);
    RandomStream b(99);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_unit(), b.next_unit());
    EXPECT_EQ(a.position(), 1000u);
}

TEST(RandomStream, AdjacentSeedsDiffer) {
    RandomStream a(0);
    RandomStream b(1);
    int equal = 0;
    for (int i = 0; i < 100; ++i) equal += a.next_unit() == b.next_unit();
    EXPECT_EQ(equal, 0);
}

TEST(RandomStream, OpenUnitIntervalAndMoments) {
    RandomStream rng(7);
    const int n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum2 += u * u;
    }
    // Mean 1/2 (sd 1/sqrt(12 n)), second moment 1/3.
    EXPECT_NEAR(sum / n, 0.5, 4.0 / std::sqrt(12.0 * n));
    EXPECT_NEAR(sum2 / n, 1.0 / 3.0, 4.0 * std::sqrt(4.0 / 45.0 / n));
}

TEST(RandomStream, DerivedSeedsAreDistinct) {
    std::set<std::uint64_t> seeds;
    for (int m = -10; m <= 10; ++m) {
        for (int n = -20; n <= 20; ++n) seeds.insert(RandomStream::derive_seed(5, m, n));
    }
    EXPECT_EQ(seeds.size(), 21u * 41u);
    EXPECT_NE(RandomStream::derive_seed(5, 1, 2), RandomStream::derive_seed(5, 2, 1));
    EXPECT_NE(RandomStream::derive_seed(5, 0, 0), RandomStream::derive_seed(6, 0, 0));
}

TEST(Mix64, KnownValue) {
    // First output of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace hexdrop
