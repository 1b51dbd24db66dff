#include <gtest/gtest.h>

#include "carlitz/wieferich.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {

Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

}  // namespace

TEST(Wieferich, Examples) {
    auto F = GaloisField::of_order(3);
    const auto a = classify_wieferich(P(F, "T"));
    EXPECT_EQ(a.residue, P(F, "T"));
    EXPECT_FALSE(a.is_wieferich);
    EXPECT_FALSE(a.degree_divisible_by_p().has_value());
    const auto b = classify_wieferich(P(F, "T+1"));
    EXPECT_EQ(b.residue, P(F, "T+1"));
    EXPECT_FALSE(b.is_wieferich);
    // A unit multiple is classified through its monic associate.
    EXPECT_EQ(classify_wieferich(P(F, "2*T+2")).residue, b.residue);
    EXPECT_THROW(classify_wieferich(parse_poly(GaloisField::of_order(2), "T")), Error);
    EXPECT_THROW(classify_wieferich(P(F, "T^2")), Error);
}

TEST(Wieferich, DegreeOneScan) {
    auto F = GaloisField::of_order(3);
    const auto scan = scan_wieferich(F, 1);
    ASSERT_EQ(scan.records.size(), 3u);
    EXPECT_EQ(scan.records[2].prime, P(F, "T+2"));
    EXPECT_EQ(scan.records[2].residue, P(F, "T+2"));
    EXPECT_EQ(scan.wieferich_count(), 0u);
    EXPECT_TRUE(scan_wieferich(F, 3, Shard{4, 4}).records.empty());
}

TEST(Wieferich, ResiduesMatchDirectOracle) {
    for (std::int64_t p : {3, 5}) {
        auto F = GaloisField::of_order(static_cast<std::uint64_t>(p));
        for (const auto& r : scan_wieferich(F, p == 3 ? 4 : 3).records) {
            const oracle::Vec prime = oracle::from_poly(r.prime);
            const oracle::Vec full = oracle::carlitz_value(oracle::sub(prime, {1}, p), {1}, p);
            const oracle::Vec residue = oracle::rem(full, oracle::mul(prime, prime, p), p);
            EXPECT_EQ(oracle::from_poly(r.residue), residue) << to_string(r.prime);
            EXPECT_EQ(r.is_wieferich, residue.empty());
        }
    }
}

TEST(Wieferich, KnownInstanceUpToDegreeSix) {
    // The direct oracle finds exactly one Wieferich prime at q = 3 with deg <= 6.
    auto F = GaloisField::of_order(3);
    const auto scan = scan_wieferich(F, 6, {}, 2);
    std::vector<Poly> found;
    for (const auto& r : scan.records)
        if (r.is_wieferich) found.push_back(r.prime);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], P(F, "T^6+T^4+T^3+T^2+2*T+2"));
    const auto rec = classify_wieferich(found[0]);
    ASSERT_TRUE(rec.degree_divisible_by_p().has_value());
    EXPECT_TRUE(*rec.degree_divisible_by_p());
    EXPECT_TRUE(scan.conjecture_exceptions.empty());

    const oracle::Vec prime = oracle::from_poly(found[0]);
    const oracle::Vec full = oracle::carlitz_value(oracle::sub(prime, {1}, 3), {1}, 3);
    EXPECT_TRUE(oracle::rem(full, oracle::mul(prime, prime, 3), 3).empty());
}

TEST(Wieferich, MersennePrimesAreNotWieferich) {
    for (std::uint64_t q : {3, 4, 5}) {
        const auto r = mersenne_nonwieferich(GaloisField::of_order(q), 3);
        EXPECT_TRUE(r.passed());
        EXPECT_GT(r.cases, 0u);
    }
}
