#pragma once

#include <cstdint>

#include "carlitz/factor.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

/// Monic generator of {a in A : C_a(1) == 0 mod P}.
struct AnnihilatorRecord {
    Poly prime;
    Poly annihilator;
    /// Set once annihilation, divisibility of P - 1 and minimality were re-checked.
    bool cofactor_checked = false;
};

/// Order reduction from the multiple P - 1: strip each prime factor of the
/// candidate while C_{candidate/l}(1) stays divisible by P.
AnnihilatorRecord carlitz_annihilator(const Poly& prime, std::uint64_t seed = 0);

/// Independent oracle: the first monic a (by degree, then index) with
/// C_a(1) == 0 mod P, after checking the ideal property on every monic
/// polynomial up to that degree. Limited to deg P <= 4.
Poly annihilator_bruteforce(const Poly& prime);

/// For each monic prime Q | C_P(1): the annihilator of Q is P, which is
/// prime, and Q divides C_P(1).
VerificationReport check_mersenne_divisor_annihilator(const Poly& prime, std::uint64_t seed = 0);

}  // namespace carlitz
