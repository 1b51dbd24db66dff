#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "carlitz/gf.hpp"

namespace carlitz {

using BigInt = mpz_class;

/// Degree of an element of F_q[T]. deg(0) is the NEG_INF sentinel; value()
/// refuses to hand it out as a number.
class Degree {
public:
    static constexpr Degree neg_inf() noexcept { return Degree(kNegInf, Raw{}); }
    constexpr explicit Degree(std::size_t d) noexcept : v_(static_cast<std::int64_t>(d)) {}

    constexpr bool is_neg_inf() const noexcept { return v_ == kNegInf; }
    std::size_t value() const {
        if (is_neg_inf()) throw Error(ErrorCode::ZeroInput, "degree of the zero polynomial is -inf");
        return static_cast<std::size_t>(v_);
    }
    std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

    constexpr auto operator<=>(const Degree&) const = default;

private:
    struct Raw {};
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    constexpr Degree(std::int64_t v, Raw) noexcept : v_(v) {}
    std::int64_t v_;
};

/// Dense element of A = F_q[T]; coeffs()[i] is the coefficient of T^i and
/// the top stored coefficient is nonzero (zero is the empty sequence).
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(const FieldPtr& field) { return Poly(field); }
    static Poly one(const FieldPtr& field) { return constant(field, 1); }
    static Poly constant(const FieldPtr& field, Elem c);
    static Poly monomial(const FieldPtr& field, Elem c, std::size_t k);
    /// The indeterminate T.
    static Poly t(const FieldPtr& field) { return monomial(field, 1, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const GaloisField& gf() const noexcept { return *field_; }
    std::span<const Elem> coeffs() const noexcept { return c_; }
    /// Number of stored coefficients (deg + 1, or 0 for zero).
    std::size_t length() const noexcept { return c_.size(); }
    Degree degree() const noexcept { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    /// True for zero and for nonzero constants.
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly scaled(Elem c) const;
    /// this * T^k
    Poly shifted(std::size_t k) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator/(const Poly& o) const;
    Poly operator%(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const noexcept;

    void check_same_field(const Poly& o) const;

private:
    void trim() noexcept;

    FieldPtr field_;
    std::vector<Elem> c_;
};

enum class PolyOp { Add, Sub, Mul };

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g);
/// Quotient and remainder with deg(r) < deg(g).
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
/// Monic gcd; BothZero when f = g = 0.
Poly gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*f + t*g_in == g
};
ExtendedGcd xgcd(const Poly& f, const Poly& g);

/// base^e mod m by square-and-multiply; m must have positive degree.
Poly powmod(const Poly& base, const BigInt& e, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly pow(const Poly& base, std::uint64_t e);

/// |m| = q^deg(m), the size of A/mA.
BigInt norm_size(const Poly& m);

Poly derivative(const Poly& f);
/// f(T)^q. Coefficients are fixed by Frobenius, so this only spreads them.
Poly frobenius(const Poly& f);
/// f(T)^(q^k)
Poly frobenius(const Poly& f, std::size_t k);
/// f^q mod m via spreading and one reduction.
Poly frobenius_mod(const Poly& f, const Poly& m);
/// Inverse of the q/p-th power on coefficients: requires f' = 0.
Poly pth_root(const Poly& f);

/// Precomputed q-power map on A/mA: rows T^(iq) mod m. Worth it when the
/// same modulus sees many Frobenius applications.
class FrobeniusMap {
public:
    explicit FrobeniusMap(const Poly& modulus);

    const Poly& modulus() const noexcept { return mod_; }
    /// h^q mod m
    Poly apply(const Poly& h) const;

private:
    Poly mod_;
    std::vector<std::vector<Elem>> rows_;
};

// Enumeration of monic polynomials. The i-th monic polynomial of degree d
// has its lower coefficients equal to the base-q digits of i.

/// q^d, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> monic_count(const GaloisField& field, std::size_t d);
Poly monic_from_index(const FieldPtr& field, std::size_t d, std::uint64_t index);
/// Index of a monic polynomial within its degree; nullopt on 64-bit overflow.
std::optional<std::uint64_t> monic_index(const Poly& f);
/// Monic polynomials of degree d with indices in [begin, end).
std::vector<Poly> enumerate_monic(const FieldPtr& field, std::size_t d, std::uint64_t begin, std::uint64_t end);
std::vector<Poly> enumerate_monic(const FieldPtr& field, std::size_t d);
/// Total order by (degree, enumeration index) extended to non-monic inputs
/// by comparing leading coefficients last.
std::strong_ordering enumeration_order(const Poly& a, const Poly& b);

/// Parses "T^3+2*T+1"-style text; coefficients are field elements in
/// canonical integer form.
Poly parse_poly(const FieldPtr& field, std::string_view text, char var = 'T');
std::string to_string(const Poly& f, char var = 'T');

}  // namespace carlitz
