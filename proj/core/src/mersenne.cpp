#include "carlitz/mersenne.hpp"

#include "carlitz/carlitz.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

MersenneRecord mersenne_number(const Poly& prime, std::uint64_t seed) {
    require_q_above_two(prime.gf());
    require_monic_prime(prime);
    const auto& F = prime.field();
    Poly value = carlitz_eval(prime, Poly::one(F));
    const FieldElem unit(F, value.leading());
    Poly monic = value.monic();
    const bool is_prime = !monic.is_constant() && is_irreducible(monic);
    std::optional<Factorization> fac;
    if (!is_prime && prime.length() - 1 <= kEagerFactorDegree) fac = factorize(value, seed);
    return MersenneRecord{prime, std::move(value), std::move(monic), unit, is_prime, std::move(fac)};
}

Factorization mersenne_factors(const MersenneRecord& record, std::uint64_t seed) {
    if (record.factorization) return *record.factorization;
    return factorize(record.value, seed);
}

std::optional<MersenneRecord> mersenne_candidate(const FieldPtr& field, std::size_t d, std::uint64_t index,
                                                 std::uint64_t seed) {
    require_q_above_two(*field);
    Poly p = monic_from_index(field, d, index);
    if (!is_irreducible(p)) return std::nullopt;
    return mersenne_number(p, mix_seed(seed, index));
}

MersenneScan scan_mersenne(const FieldPtr& field, std::size_t dmin, std::size_t dmax, const Shard& shard,
                           unsigned jobs, std::uint64_t seed) {
    require_q_above_two(*field);
    if (dmin < 1 || dmin > dmax) throw Error(ErrorCode::InvalidArgument, "need 1 <= dmin <= dmax");
    MersenneScan scan;
    for (std::size_t d = dmin; d <= dmax; ++d) {
        MersenneDegreeSummary summary{d};
        const auto [lo, hi] = shard_range(*field, d, shard);
        auto results = parallel_map_ordered(lo, hi, jobs, [&](std::uint64_t i) {
            return mersenne_candidate(field, d, i, seed);
        });
        for (auto& r : results) {
            if (!r) continue;
            ++summary.monic_primes;
            ++(r->is_prime ? summary.mersenne_primes : summary.composites);
            scan.records.push_back(std::move(*r));
        }
        scan.summary.push_back(summary);
    }
    return scan;
}

VerificationReport verify_divisor_congruence(const Poly& prime, std::uint64_t seed) {
    const MersenneRecord rec = mersenne_number(prime, seed);
    VerificationReport report{"divisor-congruence"};
    const Factorization fac = mersenne_factors(rec, seed);
    const Poly one = Poly::one(prime.field());
    for (const auto& [q, e] : fac.factors) {
        ++report.cases;
        const Poly r = q % prime;
        Witness w;
        w.add("P", to_string(prime)).add("Q", to_string(q)).add("Q_mod_P", to_string(r));
        if (r == one)
            report.witnesses.push_back(std::move(w));
        else
            report.failures.push_back(std::move(w));
    }
    return report;
}

VerificationReport composite_from_twins(const FieldPtr& field, std::size_t dmin, std::size_t dmax) {
    require_q_above_two(*field);
    if (dmin < 2) throw Error(ErrorCode::DegreeTooSmall, "the twin-prime argument needs degree n >= 2");
    VerificationReport report{"twins-composite"};
    const Poly one = Poly::one(field);
    for (std::size_t n = dmin; n <= dmax; ++n) {
        for (const auto& [w, p] : twin_prime_pairs(field, n)) {
            ++report.cases;
            const MersenneRecord rec = mersenne_number(w);
            const bool divisible = (rec.value % p).is_zero();
            const std::size_t expected = ipow(field->q(), n - 1);
            const std::size_t actual = rec.value.degree().value();
            const bool degree_ok = actual == expected && expected > n;
            Witness wit;
            wit.add("wp", to_string(w))
                .add("P", to_string(p))
                .add("value_degree", std::to_string(actual))
                .add("expected_degree", std::to_string(expected))
                .add("divisible", divisible ? "true" : "false")
                .add("composite", rec.is_prime ? "false" : "true");
            if (divisible && degree_ok && !rec.is_prime)
                report.witnesses.push_back(std::move(wit));
            else
                report.failures.push_back(std::move(wit));
        }
    }
    if (report.cases == 0) report.notes.push_back("no twin prime pairs in range; vacuous pass");
    return report;
}

VerificationReport verify_shape_lemma(const FieldPtr& field, std::size_t max_deg_m, std::size_t max_deg_alpha) {
    if (field->q() < 3) throw Error(ErrorCode::QIsTwo, "the shape lemma assumes q >= 3");
    VerificationReport report{"shape-lemma"};

    std::vector<Poly> alphas;
    for (std::size_t h = 0; h <= max_deg_alpha; ++h)
        for (const auto& monic : enumerate_monic(field, h))
            for (Elem u = 1; u < field->q(); ++u) alphas.push_back(monic.scaled(u));

    for (std::size_t d = 1; d <= max_deg_m; ++d) {
        for (const auto& m : enumerate_monic(field, d)) {
            const bool m_prime = is_irreducible(m);
            for (const auto& alpha : alphas) {
                ++report.cases;
                const Poly value = carlitz_eval(m, alpha);
                if (value.is_constant() || !is_irreducible(value)) continue;
                Witness w;
                w.add("m", to_string(m)).add("alpha", to_string(alpha)).add("value", to_string(value));
                if (alpha.is_constant() && m_prime)
                    report.witnesses.push_back(std::move(w));
                else
                    report.failures.push_back(std::move(w));
            }
        }
    }
    if (report.witnesses.empty() && report.failures.empty())
        report.notes.push_back("no prime values in range");
    return report;
}

}  // namespace carlitz
