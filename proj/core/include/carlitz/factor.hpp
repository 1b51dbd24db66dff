#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

struct PrimePower {
    Poly prime;  // monic irreducible
    std::uint32_t exponent;

    bool operator==(const PrimePower&) const = default;
};

/// unit * prod prime^exponent, factors sorted by (degree, enumeration index).
struct Factorization {
    FieldElem unit;
    std::vector<PrimePower> factors;

    Poly expand() const;
    /// Number of prime factors counted with multiplicity.
    std::uint32_t total_multiplicity() const noexcept;
};

/// Deterministic test: T^(q^n) == T mod f and gcd(T^(q^(n/l)) - T, f) == 1
/// for every prime l | n.
bool is_irreducible(const Poly& f);

bool is_monic_prime(const Poly& f);
/// Throws NotMonicPrime unless f is monic and irreducible.
void require_monic_prime(const Poly& f);

/// Complete factorization. The seed only steers equal-degree splitting; the
/// result never depends on it.
Factorization factorize(const Poly& f, std::uint64_t seed = 0);

/// Monic irreducibles of degree d in enumeration order.
std::vector<Poly> monic_primes(const FieldPtr& field, std::size_t d);

/// All monic P of degree d with P and P + 1 irreducible, in enumeration order.
std::vector<std::pair<Poly, Poly>> twin_prime_pairs(const FieldPtr& field, std::size_t d);

/// splitmix64-style mixing of a global seed with a per-candidate index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace carlitz
