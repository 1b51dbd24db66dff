#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carlitz/factor.hpp"
#include "carlitz/report.hpp"
#include "carlitz/scan.hpp"

namespace carlitz {

/// Composite records for primes P of degree at most this are factored
/// eagerly; above it factors are computed on demand.
inline constexpr std::size_t kEagerFactorDegree = 6;

/// C_P(1) for a monic prime P. Mersenne numbers are only defined up to a
/// unit, so the record keeps the value and its monic associate.
struct MersenneRecord {
    Poly prime;            // P
    Poly value;            // C_P(1)
    Poly monic_associate;  // value / leading_unit
    FieldElem leading_unit;
    bool is_prime;
    std::optional<Factorization> factorization;

    /// The dominant-degree argument needs deg P >= 2; then deg(value) = q^(deg P - 1).
    bool degree_law_applies() const { return prime.degree() >= Degree(2); }
};

/// Errors: QIsTwo; NotMonicPrime.
MersenneRecord mersenne_number(const Poly& prime, std::uint64_t seed = 0);

/// The stored factorization, or a fresh one for lazily-factored records.
Factorization mersenne_factors(const MersenneRecord& record, std::uint64_t seed = 0);

/// Record for the index-th monic polynomial of degree d, if it is prime.
std::optional<MersenneRecord> mersenne_candidate(const FieldPtr& field, std::size_t d, std::uint64_t index,
                                                 std::uint64_t seed = 0);

struct MersenneDegreeSummary {
    std::size_t degree = 0;
    std::size_t monic_primes = 0;
    std::size_t mersenne_primes = 0;
    std::size_t composites = 0;
};

struct MersenneScan {
    std::vector<MersenneRecord> records;
    std::vector<MersenneDegreeSummary> summary;
};

MersenneScan scan_mersenne(const FieldPtr& field, std::size_t dmin, std::size_t dmax, const Shard& shard = {},
                           unsigned jobs = 1, std::uint64_t seed = 0);

/// Every monic prime Q dividing C_P(1) satisfies Q == 1 mod P.
VerificationReport verify_divisor_congruence(const Poly& prime, std::uint64_t seed = 0);

/// For each twin pair (w, w + 1) with dmin <= deg <= dmax: w + 1 divides
/// C_w(1), deg C_w(1) = q^(n-1) > n, and C_w(1) is not prime. dmin >= 2.
VerificationReport composite_from_twins(const FieldPtr& field, std::size_t dmin, std::size_t dmax);

/// Exhaustive check that C_m(alpha) prime forces alpha to be a nonzero
/// constant and m to be prime.
VerificationReport verify_shape_lemma(const FieldPtr& field, std::size_t max_deg_m, std::size_t max_deg_alpha);

}  // namespace carlitz
