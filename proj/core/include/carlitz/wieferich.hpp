#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carlitz/report.hpp"
#include "carlitz/scan.hpp"

namespace carlitz {

struct WieferichRecord {
    Poly prime;    // monic associate of the classified prime
    Poly residue;  // C_{P-1}(1) mod P^2
    bool is_wieferich;

    /// Thakur's conjecture field: whether p | deg P, reported for Wieferich
    /// primes only.
    std::optional<bool> degree_divisible_by_p() const;
};

/// Errors: QIsTwo; NotMonicPrime when the input is not a prime. A non-monic
/// prime is classified through its monic associate.
WieferichRecord classify_wieferich(const Poly& prime);

std::optional<WieferichRecord> wieferich_candidate(const FieldPtr& field, std::size_t d, std::uint64_t index);

struct WieferichScan {
    std::vector<WieferichRecord> records;
    /// Wieferich primes whose degree is not divisible by p. Data, not a failure.
    std::vector<WieferichRecord> conjecture_exceptions;

    std::size_t wieferich_count() const;
};

WieferichScan scan_wieferich(const FieldPtr& field, std::size_t dmax, const Shard& shard = {}, unsigned jobs = 1,
                             std::size_t dmin = 1);

/// Every Mersenne prime with deg P <= dmax classifies as non-Wieferich.
VerificationReport mersenne_nonwieferich(const FieldPtr& field, std::size_t dmax, unsigned jobs = 1);

}  // namespace carlitz
