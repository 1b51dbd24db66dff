#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/// Default cap on the x-degree of expanded polynomials: q^deg(m) <= 3^9.
inline constexpr std::uint64_t kDefaultExpansionBound = 19683;

/// Element sum_i a_i tau^i of the twisted ring A{tau}, acting as
/// x -> sum_i a_i x^(q^i). Top coefficient is nonzero unless empty.
class TwistedPoly {
public:
    explicit TwistedPoly(FieldPtr field, std::vector<Poly> coeffs = {});

    static TwistedPoly identity(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    std::size_t length() const noexcept { return c_.size(); }
    Poly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly::zero(field_); }

    /// Applies the operator to x exactly.
    Poly apply(const Poly& x) const;

    bool operator==(const TwistedPoly& o) const { return c_ == o.c_; }

private:
    FieldPtr field_;
    std::vector<Poly> c_;
};

/// Composition U o V under tau * a = a^q * tau.
TwistedPoly twisted_mul(const TwistedPoly& u, const TwistedPoly& v);

/// The operator C_m, assembled by Horner over the T-digits of m from C_T = T + tau.
TwistedPoly carlitz_coeffs(const Poly& m);

/// C_m(x), reduced mod `modulus` when given. Never expands C_m: it walks
/// x_{i+1} = T x_i + x_i^q and sums the digits of m against the x_i.
Poly carlitz_eval(const Poly& m, const Poly& x, const std::optional<Poly>& modulus = std::nullopt);

/// Polynomial in x with coefficients in A.
class XPoly {
public:
    explicit XPoly(FieldPtr field, std::vector<Poly> coeffs = {});

    static XPoly x(const FieldPtr& field);
    static XPoly constant(const Poly& c);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    std::size_t length() const noexcept { return c_.size(); }
    Degree degree() const noexcept { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    Poly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Poly::zero(field_); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    /// Substitutes x := value.
    Poly evaluate(const Poly& value) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    bool operator==(const XPoly& o) const { return c_ == o.c_; }

private:
    void trim();

    FieldPtr field_;
    std::vector<Poly> c_;
};

/// Division by a divisor that is monic in x; exact over A.
std::pair<XPoly, XPoly> divrem_monic(const XPoly& f, const XPoly& g);

/// "x^3+(T)*x" style rendering.
std::string to_string(const XPoly& f);

/// C_m(x) written out in x; ExpansionTooLarge when q^deg(m) > bound.
XPoly carlitz_xpoly(const Poly& m, std::uint64_t bound = kDefaultExpansionBound);

/// Phi_m(x): C_m(x) divided by Phi_a(x) over the proper monic divisors a
/// of m, with Phi_1(x) = x. For a prime P this is C_P(x)/x.
XPoly cyclotomic_xpoly(const Poly& m, std::uint64_t bound = kDefaultExpansionBound);

}  // namespace carlitz
