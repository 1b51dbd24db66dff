#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "carlitz/cyclosplit.hpp"
#include "carlitz/factor.hpp"
#include "carlitz/mersenne.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

// Counts distinct roots of Phi_P mod w by trying every residue class of
// degree < deg w, evaluating with the oracle's own arithmetic.
bool splits_by_root_count(const Poly& prime, const Poly& w, std::int64_t p) {
    const XPoly phi = cyclotomic_xpoly(prime);
    const oracle::Vec wv = oracle::from_poly(w);
    const std::size_t dw = w.degree().value();
    std::size_t roots = 0;
    for (std::size_t d = 0; d <= dw; ++d) {
        std::vector<oracle::Vec> candidates = d == 0 ? std::vector<oracle::Vec>{oracle::Vec{}} : std::vector<oracle::Vec>{};
        if (d > 0)
            for (const auto& m : oracle::monics(d - 1, p))
                for (std::int64_t u = 1; u < p; ++u) {
                    oracle::Vec v = m;
                    for (auto& c : v) c = oracle::md(c * u, p);
                    candidates.push_back(v);
                }
        for (const auto& r : candidates) {
            oracle::Vec acc;
            for (std::size_t j = phi.length(); j-- > 0;)
                acc = oracle::rem(oracle::add(oracle::mul(acc, r, p), oracle::from_poly(phi.coeff(j)), p), wv, p);
            if (acc.empty()) ++roots;
        }
    }
    return roots == phi.length() - 1;
}

}  // namespace

TEST(CyclotomicRing, LambdaArithmetic) {
    auto F = GaloisField::of_order(3);
    auto ring = std::make_shared<const CyclotomicRing>(P(F, "T"));
    EXPECT_EQ(ring->dimension(), 2u);
    const auto lam = CyclotomicResidue::lambda(ring);
    // lambda^2 = -T
    EXPECT_EQ((lam * lam).value(), XPoly::constant(P(F, "2*T")));
    EXPECT_EQ(ring->sigma(P(F, "2")), XPoly({F}, {Poly::zero(F), P(F, "2")}));
}

TEST(Norm, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_EQ(norm_of_one_minus_lambda(P(F, "T")), P(F, "T+1"));
    EXPECT_EQ(norm_of_one_minus_lambda(P(F, "T+1")), P(F, "T+2"));
    EXPECT_EQ(norm_of_one_minus_lambda(P(F, "T^2+1")), P(F, "T^3+T^2+T+2"));
    EXPECT_THROW(norm_of_one_minus_lambda(P(F, "T^2")), Error);
    try {
        norm_of_one_minus_lambda(P(F, "T^3+2*T+1"), 9);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ExpansionTooLarge);
    }
}

TEST(Norm, EqualsMersenneValue) {
    for (std::uint64_t q : {3, 4}) {
        auto F = GaloisField::of_order(q);
        for (std::size_t d = 1; d <= (q == 3 ? 2u : 1u); ++d)
            for (const auto& p : monic_primes(F, d))
                EXPECT_EQ(norm_of_one_minus_lambda(p), mersenne_number(p).value) << to_string(p);
    }
}

TEST(Split, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_TRUE(splits_completely(P(F, "T"), P(F, "T+1")));
    EXPECT_TRUE(splits_completely(P(F, "T"), P(F, "T^2+1")));
    EXPECT_FALSE(splits_completely(P(F, "T+1"), P(F, "T")));
    EXPECT_TRUE(splits_completely(P(F, "T^2+1"), P(F, "T^3+T^2+T+2")));
    try {
        splits_completely(P(F, "T"), P(F, "T"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SamePrime);
    }
    EXPECT_THROW(splits_completely(P(F, "T"), P(F, "T^2+2")), Error);
}

TEST(Split, MatchesRootCountOracleAndCongruence) {
    auto F = GaloisField::of_order(3);
    for (std::size_t dp = 1; dp <= 2; ++dp)
        for (const auto& p : monic_primes(F, dp))
            for (std::size_t dw = 1; dw <= 3; ++dw)
                for (const auto& w : monic_primes(F, dw)) {
                    if (w == p) continue;
                    const bool s = splits_completely(p, w);
                    EXPECT_EQ(s, splits_by_root_count(p, w, 3)) << to_string(p) << " / " << to_string(w);
                    EXPECT_EQ(s, (w % p).is_one()) << to_string(p) << " / " << to_string(w);
                }
}

TEST(Eisenstein, Examples) {
    auto F = GaloisField::of_order(3);
    EXPECT_TRUE(eisenstein_check(P(F, "T^2+1")));
    EXPECT_TRUE(eisenstein_check(P(F, "T")));
    EXPECT_EQ(carlitz_coeffs(P(F, "T^2+1")).coeff(1), P(F, "T^3+T"));
    EXPECT_THROW(eisenstein_check(P(F, "T^2+2")), Error);
}

TEST(Eisenstein, AllSmallPrimes) {
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::size_t d = 1; d <= 4; ++d)
            for (const auto& p : monic_primes(GaloisField::of_order(q), d)) EXPECT_TRUE(eisenstein_check(p));
}

TEST(PrimalityCriterion, Instances) {
    auto F = GaloisField::of_order(3);
    for (const char* s : {"T", "T^2+1", "T^3+2*T+1"}) {
        const auto r = primality_criterion_check(P(F, s), 0, 27);
        EXPECT_TRUE(r.passed()) << s;
    }
    const auto composite = primality_criterion_check(P(F, "T^3+2*T+1"), 0, 27);
    EXPECT_EQ(*composite.witnesses.at(0).find("prime"), "false");
}
