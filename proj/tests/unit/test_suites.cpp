#include <gtest/gtest.h>

#include "carlitz/suites.hpp"

using namespace carlitz;

TEST(Suites, PassOnSmallRanges) {
    for (std::uint64_t q : {3, 4}) {
        auto F = GaloisField::of_order(q);
        EXPECT_TRUE(verify_fermat(F, 4, 50, 1).passed());
        EXPECT_TRUE(verify_eisenstein(F, 3).passed());
        EXPECT_TRUE(verify_divisor_congruence_range(F, 3, 2).passed());
        EXPECT_TRUE(verify_annihilator_oracle(F, 2).passed());
        EXPECT_TRUE(verify_divisor_annihilators(F, 2).passed());
        EXPECT_TRUE(verify_norm(F, 1).passed());
        EXPECT_TRUE(verify_split(F, 1, 5, 1).passed());
        EXPECT_TRUE(verify_primality_criterion(F, 1).passed());
    }
}

TEST(Suites, SeedReproducible) {
    auto F = GaloisField::of_order(5);
    const auto a = verify_fermat(F, 5, 30, 42);
    const auto b = verify_fermat(F, 5, 30, 42);
    ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) EXPECT_EQ(a.witnesses[i].fields, b.witnesses[i].fields);
    EXPECT_EQ(a.cases, 30u);
}

TEST(Suites, SplitRejectsNonCongruentPrimes) {
    auto F = GaloisField::of_order(3);
    const auto r = verify_split(F, 2, 20, 9);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.witnesses.size(), 6u);
    EXPECT_EQ(r.cases, 6u * 21u);
}
