#pragma once

#include <cstdint>
#include <limits>
#include <utility>

#include "carlitz/poly.hpp"

namespace carlitz {

/// Half-open interval of enumeration indices, applied to every degree of a
/// multi-degree scan and clipped to [0, q^d).
struct Shard {
    std::uint64_t begin = 0;
    std::uint64_t end = std::numeric_limits<std::uint64_t>::max();

    bool empty() const noexcept { return begin >= end; }
};

/// The shard's index range within degree d.
inline std::pair<std::uint64_t, std::uint64_t> shard_range(const GaloisField& field, std::size_t d,
                                                           const Shard& shard) {
    const auto count = monic_count(field, d).value_or(std::numeric_limits<std::uint64_t>::max());
    const std::uint64_t lo = std::min(shard.begin, count);
    const std::uint64_t hi = std::min(shard.end, count);
    return {lo, std::max(lo, hi)};
}

/// Refuses q = 2, where Mersenne numbers and Wieferich primes are undefined.
inline void require_q_above_two(const GaloisField& field) {
    if (field.q() == 2) throw Error(ErrorCode::QIsTwo, "Mersenne and Wieferich notions require q > 2");
}

}  // namespace carlitz
