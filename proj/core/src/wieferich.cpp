#include "carlitz/wieferich.hpp"

#include <algorithm>

#include "carlitz/carlitz.hpp"
#include "carlitz/factor.hpp"
#include "carlitz/mersenne.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

std::optional<bool> WieferichRecord::degree_divisible_by_p() const {
    if (!is_wieferich) return std::nullopt;
    return prime.degree().value() % prime.gf().p() == 0;
}

WieferichRecord classify_wieferich(const Poly& prime) {
    require_q_above_two(prime.gf());
    if (prime.is_constant() || !is_irreducible(prime))
        throw Error(ErrorCode::NotMonicPrime, to_string(prime) + " is not prime");
    const Poly p = prime.monic();
    const auto& F = p.field();
    const Poly p_minus_1 = p - Poly::one(F);
    const Poly residue = carlitz_eval(p_minus_1, Poly::one(F), p * p);
    if (!(residue % p).is_zero())
        throw Error(ErrorCode::InvariantViolation, "C_{P-1}(1) not divisible by P = " + to_string(p));
    return {p, residue, residue.is_zero()};
}

std::optional<WieferichRecord> wieferich_candidate(const FieldPtr& field, std::size_t d, std::uint64_t index) {
    require_q_above_two(*field);
    Poly p = monic_from_index(field, d, index);
    if (!is_irreducible(p)) return std::nullopt;
    return classify_wieferich(p);
}

std::size_t WieferichScan::wieferich_count() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.is_wieferich; }));
}

WieferichScan scan_wieferich(const FieldPtr& field, std::size_t dmax, const Shard& shard, unsigned jobs,
                             std::size_t dmin) {
    require_q_above_two(*field);
    if (dmin < 1) throw Error(ErrorCode::InvalidArgument, "dmin must be >= 1");
    WieferichScan scan;
    for (std::size_t d = dmin; d <= dmax; ++d) {
        const auto [lo, hi] = shard_range(*field, d, shard);
        auto results =
            parallel_map_ordered(lo, hi, jobs, [&](std::uint64_t i) { return wieferich_candidate(field, d, i); });
        for (auto& r : results) {
            if (!r) continue;
            if (r->degree_divisible_by_p() == false) scan.conjecture_exceptions.push_back(*r);
            scan.records.push_back(std::move(*r));
        }
    }
    return scan;
}

VerificationReport mersenne_nonwieferich(const FieldPtr& field, std::size_t dmax, unsigned jobs) {
    VerificationReport report{"non-wieferich"};
    if (dmax < 1) {
        report.notes.push_back("empty degree range; vacuous pass");
        return report;
    }
    const MersenneScan scan = scan_mersenne(field, 1, dmax, {}, jobs);
    for (const auto& rec : scan.records) {
        if (!rec.is_prime) continue;
        ++report.cases;
        const WieferichRecord w = classify_wieferich(rec.monic_associate);
        Witness wit;
        wit.add("P", to_string(rec.prime))
            .add("mersenne", to_string(rec.monic_associate))
            .add("residue", to_string(w.residue))
            .add("wieferich", w.is_wieferich ? "true" : "false");
        if (w.is_wieferich)
            report.failures.push_back(std::move(wit));
        else
            report.witnesses.push_back(std::move(wit));
    }
    if (report.cases == 0) report.notes.push_back("no Mersenne primes in range; vacuous pass");
    return report;
}

}  // namespace carlitz
