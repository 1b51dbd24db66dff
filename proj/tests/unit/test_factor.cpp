#include <gtest/gtest.h>

#include <random>

#include "carlitz/factor.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

}  // namespace

TEST(Irreducible, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_TRUE(is_irreducible(P(F, "T^2+1")));
    EXPECT_FALSE(is_irreducible(P(F, "T^2+2")));
    EXPECT_TRUE(is_irreducible(P(F, "T^3+2*T+1")));
    EXPECT_TRUE(is_irreducible(P(F, "2*T^2+2")));
    EXPECT_THROW(is_irreducible(P(F, "2")), Error);
}

TEST(Irreducible, MatchesTrialDivisionOracle) {
    for (std::uint64_t q : {2, 3, 5}) {
        auto F = GaloisField::of_order(q);
        for (std::size_t d = 1; d <= (q == 5 ? 4u : 6u); ++d) {
            const auto all = enumerate_monic(F, d);
            for (const auto& f : all)
                ASSERT_EQ(is_irreducible(f), oracle::irreducible(oracle::from_poly(f), static_cast<std::int64_t>(q)))
                    << to_string(f);
        }
    }
}

TEST(Irreducible, CountsMatchNecklaceFormula) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
        auto F = GaloisField::of_order(q);
        const std::size_t max_d = q <= 3 ? 8 : (q <= 9 ? 4 : 3);
        for (std::size_t d = 1; d <= max_d; ++d)
            EXPECT_EQ(static_cast<std::int64_t>(monic_primes(F, d).size()),
                      oracle::necklace(static_cast<std::int64_t>(q), static_cast<std::int64_t>(d)))
                << "q=" << q << " d=" << d;
    }
}

TEST(Factorize, Examples) {
    auto F = GaloisField::of_order(3);
    const Factorization a = factorize(P(F, "T^3+2*T"));
    EXPECT_EQ(a.unit.value(), 1u);
    ASSERT_EQ(a.factors.size(), 3u);
    EXPECT_EQ(a.factors[0], (PrimePower{P(F, "T"), 1}));
    EXPECT_EQ(a.factors[1], (PrimePower{P(F, "T+1"), 1}));
    EXPECT_EQ(a.factors[2], (PrimePower{P(F, "T+2"), 1}));

    const Factorization b = factorize(P(F, "2*T+2"));
    EXPECT_EQ(b.unit.value(), 2u);
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0], (PrimePower{P(F, "T+1"), 1}));

    const Factorization c = factorize(P(F, "T^2+1"));
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0], (PrimePower{P(F, "T^2+1"), 1}));

    EXPECT_THROW(factorize(Poly::zero(F)), Error);
    EXPECT_TRUE(factorize(P(F, "2")).factors.empty());
}

TEST(Factorize, RepeatedAndInseparableFactors) {
    auto F = GaloisField::of_order(3);
    // (T+1)^3 (T^2+1)^2 T^6 exercises the p-th root branch.
    const Poly f = pow(P(F, "T+1"), 3) * pow(P(F, "T^2+1"), 2) * pow(P(F, "T"), 6);
    const Factorization r = factorize(f);
    ASSERT_EQ(r.factors.size(), 3u);
    EXPECT_EQ(r.factors[0], (PrimePower{P(F, "T"), 6}));
    EXPECT_EQ(r.factors[1], (PrimePower{P(F, "T+1"), 3}));
    EXPECT_EQ(r.factors[2], (PrimePower{P(F, "T^2+1"), 2}));
    EXPECT_EQ(r.total_multiplicity(), 11u);
}

class FactorRoundTrip : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FactorRoundTrip, ExpandsBackAndFactorsArePrime) {
    auto F = GaloisField::of_order(GetParam());
    std::mt19937_64 rng(GetParam() * 31);
    std::uniform_int_distribution<Elem> c(0, F->q() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Elem> v(2 + trial % 30);
        for (auto& x : v) x = c(rng);
        v.back() = 1 + c(rng) % (F->q() - 1);
        const Poly f(F, v);
        const Factorization r = factorize(f, rng());
        EXPECT_EQ(r.expand(), f);
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            EXPECT_TRUE(r.factors[i].prime.is_monic());
            EXPECT_TRUE(is_irreducible(r.factors[i].prime));
            if (i) EXPECT_TRUE(enumeration_order(r.factors[i - 1].prime, r.factors[i].prime) < 0);
        }
        // The seed only steers splitting.
        EXPECT_EQ(factorize(f, 1).factors, factorize(f, 99).factors);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FactorRoundTrip, ::testing::Values(2, 3, 4, 5, 8, 9, 25, 49));

TEST(TwinPrimes, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_TRUE(twin_prime_pairs(F, 2).empty());
    const auto d3 = twin_prime_pairs(F, 3);
    ASSERT_EQ(d3.size(), 1u);
    EXPECT_EQ(d3[0].first, P(F, "T^3+2*T+1"));
    EXPECT_EQ(d3[0].second, P(F, "T^3+2*T+2"));
    EXPECT_THROW(twin_prime_pairs(F, 0), Error);
    // No restriction on q.
    EXPECT_NO_THROW(twin_prime_pairs(GaloisField::of_order(2), 3));
}

TEST(TwinPrimes, MatchOracle) {
    for (std::int64_t p : {3, 5}) {
        auto F = GaloisField::of_order(static_cast<std::uint64_t>(p));
        for (std::size_t d = 1; d <= 4; ++d) {
            std::size_t expected = 0;
            for (const auto& v : oracle::monics(d, p))
                if (oracle::irreducible(v, p) && oracle::irreducible(oracle::add(v, {1}, p), p)) ++expected;
            EXPECT_EQ(twin_prime_pairs(F, d).size(), expected) << "p=" << p << " d=" << d;
        }
    }
}
