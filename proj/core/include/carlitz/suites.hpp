#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/carlitz.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

// Range-level theorem checks built on the per-prime checks of the other
// modules. Each returns one report covering every case examined.

/// `trials` random pairs (P, alpha), 1 <= deg P <= max_deg, deg alpha < 2 max_deg:
/// C_{P-1}(alpha) == 0 mod P.
VerificationReport verify_fermat(const FieldPtr& field, std::size_t max_deg, std::size_t trials, std::uint64_t seed);

/// eisenstein_check on every monic prime of degree <= max_deg.
VerificationReport verify_eisenstein(const FieldPtr& field, std::size_t max_deg);

/// verify_divisor_congruence for every monic prime of degree <= max_deg.
VerificationReport verify_divisor_congruence_range(const FieldPtr& field, std::size_t max_deg, unsigned jobs = 1,
                                                   std::uint64_t seed = 0);

/// carlitz_annihilator agrees with annihilator_bruteforce on every monic
/// prime of degree <= max_deg.
VerificationReport verify_annihilator_oracle(const FieldPtr& field, std::size_t max_deg, std::uint64_t seed = 0);

/// check_mersenne_divisor_annihilator for every monic prime of degree <= max_deg.
VerificationReport verify_divisor_annihilators(const FieldPtr& field, std::size_t max_deg, unsigned jobs = 1,
                                               std::uint64_t seed = 0);

/// norm_of_one_minus_lambda(P) == C_P(1) for every monic prime of degree <= max_deg.
VerificationReport verify_norm(const FieldPtr& field, std::size_t max_deg,
                               std::uint64_t bound = kDefaultExpansionBound);

/// Every Mersenne prime with deg P <= max_deg has monic associate w == 1
/// mod P and Phi_P splits completely mod w; for each such P, `trials`
/// random monic primes w' != 1 mod P do not split.
VerificationReport verify_split(const FieldPtr& field, std::size_t max_deg, std::size_t trials, std::uint64_t seed,
                                std::uint64_t bound = kDefaultExpansionBound);

/// primality_criterion_check for every monic prime of degree <= max_deg.
VerificationReport verify_primality_criterion(const FieldPtr& field, std::size_t max_deg, std::uint64_t seed = 0,
                                              std::uint64_t bound = kDefaultExpansionBound);

}  // namespace carlitz
