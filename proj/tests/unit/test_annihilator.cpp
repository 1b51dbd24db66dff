#include <gtest/gtest.h>

#include "carlitz/annihilator.hpp"
#include "carlitz/carlitz.hpp"
#include "carlitz/mersenne.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

// First monic a, by degree then index, with C_a(1) == 0 mod P, using the
// definition-level evaluator.
oracle::Vec annihilator_oracle(const oracle::Vec& prime, std::int64_t p) {
    for (std::size_t d = 0;; ++d)
        for (const auto& a : oracle::monics(d, p))
            if (oracle::rem(oracle::carlitz_value(a, {1}, p), prime, p).empty()) return a;
}

}  // namespace

TEST(Annihilator, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_EQ(carlitz_annihilator(P(F, "T")).annihilator, P(F, "T+2"));
    EXPECT_EQ(carlitz_annihilator(P(F, "T+1")).annihilator, P(F, "T"));
    EXPECT_EQ(annihilator_bruteforce(P(F, "T")), P(F, "T+2"));
    EXPECT_EQ(annihilator_bruteforce(P(F, "T+1")), P(F, "T"));
    EXPECT_EQ(carlitz_annihilator(P(F, "T^2+1")).annihilator, P(F, "T^2"));
    EXPECT_EQ(carlitz_annihilator(P(F, "T^2+T+2")).annihilator, P(F, "T^2+T+1"));
    EXPECT_EQ(carlitz_annihilator(P(F, "T^2+2*T+2")).annihilator, P(F, "T^2+2*T+1"));
    EXPECT_TRUE(carlitz_annihilator(P(F, "T^2+1")).cofactor_checked);
    EXPECT_THROW(carlitz_annihilator(P(F, "T^2")), Error);
    EXPECT_THROW(annihilator_bruteforce(monic_primes(F, 5).front()), Error);
}

TEST(Annihilator, DividesPMinusOneAndAnnihilates) {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        auto F = GaloisField::of_order(q);
        for (std::size_t d = 1; d <= 4; ++d) {
            for (const auto& p : monic_primes(F, d)) {
                const Poly a = carlitz_annihilator(p).annihilator;
                EXPECT_TRUE(a.is_monic());
                EXPECT_TRUE(((p - Poly::one(F)) % a).is_zero());
                EXPECT_TRUE(carlitz_eval(a, Poly::one(F), p).is_zero());
            }
        }
    }
}

TEST(Annihilator, MatchesOracles) {
    for (std::int64_t p : {3, 5}) {
        auto F = GaloisField::of_order(static_cast<std::uint64_t>(p));
        for (std::size_t d = 1; d <= 3; ++d) {
            if (p == 5 && d == 3) break;
            for (const auto& prime : monic_primes(F, d)) {
                const Poly fast = carlitz_annihilator(prime).annihilator;
                EXPECT_EQ(fast, annihilator_bruteforce(prime));
                EXPECT_EQ(oracle::from_poly(fast), annihilator_oracle(oracle::from_poly(prime), p));
            }
        }
    }
}

TEST(Annihilator, MersenneDivisors) {
    auto F = GaloisField::of_order(3);
    const auto r = check_mersenne_divisor_annihilator(P(F, "T"));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(*r.witnesses.at(0).find("Q"), "T+1");
    EXPECT_EQ(*r.witnesses.at(0).find("annihilator"), "T");
    EXPECT_TRUE(check_mersenne_divisor_annihilator(P(F, "T^2+1")).passed());
    // A composite Mersenne number from a twin pair.
    EXPECT_EQ(carlitz_annihilator(P(F, "T^3+2*T+2")).annihilator, P(F, "T^3+2*T+1"));
    const auto twin = check_mersenne_divisor_annihilator(P(F, "T^3+2*T+1"));
    EXPECT_TRUE(twin.passed());
    EXPECT_GE(twin.cases, 2u);
}
