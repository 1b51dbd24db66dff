#pragma once

#include <cstdint>
#include <memory>

#include "carlitz/carlitz.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

/// The quotient ring A[x]/(Phi_P(x)) for a monic prime P. lambda_P is the
/// class of x; the automorphism attached to a in S_P sends x to C_a(x).
class CyclotomicRing {
public:
    explicit CyclotomicRing(const Poly& prime, std::uint64_t bound = kDefaultExpansionBound);

    const Poly& prime() const noexcept { return prime_; }
    const XPoly& phi() const noexcept { return phi_; }
    /// deg_x Phi_P = q^deg(P) - 1
    std::size_t dimension() const noexcept { return phi_.length() - 1; }

    XPoly reduce(const XPoly& f) const { return divrem_monic(f, phi_).second; }
    XPoly multiply(const XPoly& a, const XPoly& b) const { return reduce(a * b); }
    /// C_a(x) mod Phi_P
    XPoly sigma(const Poly& a) const;

private:
    Poly prime_;
    std::uint64_t bound_;
    XPoly phi_;
};

/// An element of A[x]/(Phi_P(x)).
class CyclotomicResidue {
public:
    CyclotomicResidue(std::shared_ptr<const CyclotomicRing> ring, const XPoly& value)
        : ring_(std::move(ring)), value_(ring_->reduce(value)) {}

    static CyclotomicResidue lambda(std::shared_ptr<const CyclotomicRing> ring) {
        const auto F = ring->prime().field();
        return {std::move(ring), XPoly::x(F)};
    }

    const XPoly& value() const noexcept { return value_; }
    const CyclotomicRing& ring() const noexcept { return *ring_; }

    CyclotomicResidue operator+(const CyclotomicResidue& o) const { return {ring_, value_ + o.value_}; }
    CyclotomicResidue operator-(const CyclotomicResidue& o) const { return {ring_, value_ - o.value_}; }
    CyclotomicResidue operator*(const CyclotomicResidue& o) const { return {ring_, value_ * o.value_}; }

private:
    std::shared_ptr<const CyclotomicRing> ring_;
    XPoly value_;
};

/// prod over a in S_P of (1 - C_a(x)) in A[x]/(Phi_P). Throws
/// InvariantViolation unless the product is the constant Phi_P(1) = C_P(1),
/// which it returns.
Poly norm_of_one_minus_lambda(const Poly& prime, std::uint64_t bound = kDefaultExpansionBound);

/// Whether Phi_P splits into distinct linear factors over A/wp.
/// Errors: SamePrime; NotMonicPrime; ExpansionTooLarge.
bool splits_completely(const Poly& prime, const Poly& wp, std::uint64_t bound = kDefaultExpansionBound);

/// Eisenstein criterion at P for C_P(x)/x, read off the twisted form.
bool eisenstein_check(const Poly& prime);

/// Computable consequences of the Mersenne primality criterion: the norm
/// identity; for prime M_P its monic associate is 1 mod P and splits
/// completely; for composite M_P the norm has at least two prime factors.
VerificationReport primality_criterion_check(const Poly& prime, std::uint64_t seed = 0,
                                             std::uint64_t bound = kDefaultExpansionBound);

}  // namespace carlitz
