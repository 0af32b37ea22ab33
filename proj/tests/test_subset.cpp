#include <gtest/gtest.h>

#include <algorithm>

#include "covlat/subset.hpp"

using covlat::Subset;

TEST(Subset, BasicOps) {
    auto s = Subset::of({0, 2, 5});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.min(), 0);
    EXPECT_EQ(s.to_string(), "{1,3,6}");
    EXPECT_EQ(Subset{}.to_string(), "{}");
    EXPECT_EQ(Subset::range(3), Subset::of({0, 1, 2}));
    EXPECT_EQ(Subset::range(64).size(), 64);
    EXPECT_TRUE(Subset::of({1}).is_proper_subset_of(Subset::of({1, 2})));
    EXPECT_FALSE(Subset::of({1}).is_proper_subset_of(Subset::of({1})));
}

TEST(Subset, LexLessMatchesListComparison) {
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = 0; b < 64; ++b) {
            auto ea = Subset{a}.elements();
            auto eb = Subset{b}.elements();
            EXPECT_EQ(covlat::lex_less(Subset{a}, Subset{b}), std::ranges::lexicographical_compare(ea, eb))
                << a << " vs " << b;
        }
}

TEST(Subset, CanonicalOrderIsSizeThenLex) {
    EXPECT_TRUE(covlat::canonical_less(Subset::of({3}), Subset::of({0, 1})));
    EXPECT_TRUE(covlat::canonical_less(Subset::of({0, 2}), Subset::of({1, 3})));
    EXPECT_FALSE(covlat::canonical_less(Subset::of({1, 3}), Subset::of({0, 2})));
    EXPECT_TRUE(covlat::canonical_less(Subset{}, Subset::of({0})));
}
