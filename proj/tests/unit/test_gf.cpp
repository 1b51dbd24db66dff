#include <gtest/gtest.h>

#include "carlitz/gf.hpp"
#include "oracles.hpp"

using namespace carlitz;

TEST(GaloisField, PrimeFieldNeedsNoModulus) {
    auto F = GaloisField::create(3, 1);
    EXPECT_EQ(F->q(), 3u);
    EXPECT_TRUE(F->is_prime_field());
    EXPECT_TRUE(F->modulus().empty());
}

TEST(GaloisField, NineElementsFromUSquaredPlusOne) {
    auto F = GaloisField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    EXPECT_EQ(F->q(), 9u);
    // u is the element with digits (0, 1), i.e. canonical integer 3.
    const Elem u = 3;
    EXPECT_EQ(F->mul(u, u), 2u);
    EXPECT_EQ(F->pow(u, 9), u);
    // (u + 1)^3 = u^3 + 1 = 2u + 1
    EXPECT_EQ(F->pow(u + 1, 3), 2 * u + 1);
}

TEST(GaloisField, Errors) {
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolation;
    };
    EXPECT_EQ(code([] { GaloisField::create(4, 1); }), ErrorCode::NonPrimeP);
    EXPECT_EQ(code([] { GaloisField::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }),
              ErrorCode::ReducibleModulus);
    EXPECT_EQ(code([] { GaloisField::of_order(6); }), ErrorCode::NonPrimeP);
    EXPECT_EQ(code([] { GaloisField::of_order(125); }), ErrorCode::UnsupportedQ);
    EXPECT_EQ(code([] { GaloisField::of_order(std::uint64_t{1} << 21); }), ErrorCode::UnsupportedQ);
    EXPECT_EQ(code([] { GaloisField::of_order(3)->inv(0); }), ErrorCode::DivisionByZero);
}

TEST(GaloisField, SmallPrimeArithmetic) {
    auto F = GaloisField::of_order(3);
    const FieldElem two(F, 2);
    EXPECT_EQ((two + two).value(), 1u);
    EXPECT_EQ((two * two).value(), 1u);
    EXPECT_EQ(field_pow(two, 3).value(), 2u);
    EXPECT_EQ(field_arith(FieldOp::Div, FieldElem(F, 1), two).value(), 2u);
    EXPECT_EQ(field_pow(FieldElem(F, 0), 0).value(), 1u);
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, ExhaustiveAgainstDigitOracle) {
    auto F = GaloisField::of_order(GetParam());
    const std::uint32_t q = F->q();
    for (Elem a = 0; a < q; ++a) {
        EXPECT_EQ(F->add(a, F->neg(a)), 0u);
        if (a != 0) EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
        EXPECT_EQ(F->pow(a, q), a);
        EXPECT_EQ(F->pow(F->pth_root(a), F->p()), a);
        EXPECT_EQ(F->from_digits(F->digits(a)), a);
        for (Elem b = 0; b < q; ++b) {
            EXPECT_EQ(F->add(a, b), F->add(b, a));
            EXPECT_EQ(F->mul(a, b), F->mul(b, a));
            if (!F->is_prime_field()) {
                EXPECT_EQ(F->mul(a, b), oracle::gf_mul(a, b, F->p(), F->modulus()));
            } else {
                EXPECT_EQ(F->mul(a, b), (std::uint64_t{a} * b) % q);
                EXPECT_EQ(F->add(a, b), (a + b) % q);
            }
        }
    }
}

TEST_P(FieldAxioms, Distributivity) {
    auto F = GaloisField::of_order(GetParam());
    const std::uint32_t q = F->q();
    const std::uint32_t step = q > 32 ? 7 : 1;
    for (Elem a = 0; a < q; a += step)
        for (Elem b = 0; b < q; b += step)
            for (Elem c = 0; c < q; c += step)
                EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81));

TEST(GaloisField, ParseElem) {
    auto F = GaloisField::of_order(9);
    EXPECT_EQ(parse_elem(*F, "8"), 8u);
    EXPECT_THROW(parse_elem(*F, "9"), Error);
    EXPECT_THROW(parse_elem(*F, "x"), Error);
}

TEST(GaloisField, IntegerHelpers) {
    EXPECT_TRUE(is_prime_u64(2));
    EXPECT_TRUE(is_prime_u64(1048573));
    EXPECT_FALSE(is_prime_u64(1));
    EXPECT_FALSE(is_prime_u64(91));
    EXPECT_EQ(prime_factors_u64(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(GaloisField, MismatchedFieldsRejected) {
    auto F3 = GaloisField::of_order(3);
    auto G3 = GaloisField::of_order(5);
    EXPECT_THROW(FieldElem(F3, 1) + FieldElem(G3, 1), Error);
}
