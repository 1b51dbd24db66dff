#include "carlitz/suites.hpp"

#include <random>

#include "carlitz/annihilator.hpp"
#include "carlitz/cyclosplit.hpp"
#include "carlitz/mersenne.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

std::vector<Poly> primes_up_to(const FieldPtr& field, std::size_t max_deg) {
    std::vector<Poly> out;
    for (std::size_t d = 1; d <= max_deg; ++d)
        for (auto& p : monic_primes(field, d)) out.push_back(std::move(p));
    return out;
}

Poly random_poly(const FieldPtr& field, std::size_t length, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> coeff(0, field->q() - 1);
    std::vector<Elem> c(length);
    for (auto& x : c) x = coeff(rng);
    return Poly(field, std::move(c));
}

Poly random_monic_prime(const FieldPtr& field, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> degree(1, max_deg);
    while (true) {
        const std::size_t d = degree(rng);
        Poly p = random_poly(field, d, rng) + Poly::monomial(field, 1, d);
        if (is_irreducible(p)) return p;
    }
}

template <class Check>
VerificationReport over_primes(const std::string& suite, const std::vector<Poly>& primes, unsigned jobs,
                               Check&& check) {
    VerificationReport report{suite};
    auto parts = parallel_map_ordered(0, primes.size(), jobs, [&](std::uint64_t i) { return check(primes[i]); });
    for (auto& r : parts) report.merge(std::move(r));
    return report;
}

}  // namespace

VerificationReport verify_fermat(const FieldPtr& field, std::size_t max_deg, std::size_t trials, std::uint64_t seed) {
    VerificationReport report{"fermat"};
    if (max_deg < 1) throw Error(ErrorCode::DegreeTooSmall, "Fermat trials need max_deg >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> alpha_len(0, 2 * max_deg);
    const Poly one = Poly::one(field);
    for (std::size_t t = 0; t < trials; ++t) {
        const Poly p = random_monic_prime(field, max_deg, rng);
        const Poly alpha = random_poly(field, alpha_len(rng), rng);
        ++report.cases;
        const Poly r = carlitz_eval(p - one, alpha, p);
        Witness w;
        w.add("P", to_string(p)).add("alpha", to_string(alpha)).add("residue", to_string(r));
        (r.is_zero() ? report.witnesses : report.failures).push_back(std::move(w));
    }
    return report;
}

VerificationReport verify_eisenstein(const FieldPtr& field, std::size_t max_deg) {
    return over_primes("eisenstein", primes_up_to(field, max_deg), 1, [](const Poly& p) {
        VerificationReport r{"eisenstein"};
        ++r.cases;
        Witness w;
        w.add("P", to_string(p));
        (eisenstein_check(p) ? r.witnesses : r.failures).push_back(std::move(w));
        return r;
    });
}

VerificationReport verify_divisor_congruence_range(const FieldPtr& field, std::size_t max_deg, unsigned jobs,
                                                   std::uint64_t seed) {
    return over_primes("divisor-congruence", primes_up_to(field, max_deg), jobs,
                       [seed](const Poly& p) { return verify_divisor_congruence(p, seed); });
}

VerificationReport verify_annihilator_oracle(const FieldPtr& field, std::size_t max_deg, std::uint64_t seed) {
    return over_primes("annihilator-oracle", primes_up_to(field, max_deg), 1, [seed](const Poly& p) {
        VerificationReport r{"annihilator-oracle"};
        ++r.cases;
        const Poly fast = carlitz_annihilator(p, seed).annihilator;
        const Poly slow = annihilator_bruteforce(p);
        Witness w;
        w.add("P", to_string(p)).add("annihilator", to_string(fast)).add("bruteforce", to_string(slow));
        (fast == slow ? r.witnesses : r.failures).push_back(std::move(w));
        return r;
    });
}

VerificationReport verify_divisor_annihilators(const FieldPtr& field, std::size_t max_deg, unsigned jobs,
                                               std::uint64_t seed) {
    return over_primes("annihilator", primes_up_to(field, max_deg), jobs,
                       [seed](const Poly& p) { return check_mersenne_divisor_annihilator(p, seed); });
}

VerificationReport verify_norm(const FieldPtr& field, std::size_t max_deg, std::uint64_t bound) {
    return over_primes("norm", primes_up_to(field, max_deg), 1, [bound](const Poly& p) {
        VerificationReport r{"norm"};
        ++r.cases;
        Witness w;
        w.add("P", to_string(p));
        try {
            const Poly norm = norm_of_one_minus_lambda(p, bound);
            w.add("norm", to_string(norm));
            r.witnesses.push_back(std::move(w));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InvariantViolation) throw;
            w.add("error", e.what());
            r.failures.push_back(std::move(w));
        }
        return r;
    });
}

VerificationReport verify_split(const FieldPtr& field, std::size_t max_deg, std::size_t trials, std::uint64_t seed,
                                std::uint64_t bound) {
    VerificationReport report{"split"};
    std::mt19937_64 rng(seed);
    const std::size_t other_deg = std::max<std::size_t>(max_deg + 1, 3);
    for (const auto& p : primes_up_to(field, max_deg)) {
        const MersenneRecord rec = mersenne_number(p, seed);
        if (!rec.is_prime) continue;
        const Poly& w = rec.monic_associate;
        ++report.cases;
        const bool one_mod = (w % p).is_one();
        const bool splits = w != p && splits_completely(p, w, bound);
        Witness wit;
        wit.add("P", to_string(p))
            .add("wp", to_string(w))
            .add("one_mod_P", one_mod ? "true" : "false")
            .add("splits", splits ? "true" : "false");
        (one_mod && splits ? report.witnesses : report.failures).push_back(std::move(wit));

        for (std::size_t t = 0; t < trials;) {
            const Poly other = random_monic_prime(field, other_deg, rng);
            if (other == p || (other % p).is_one()) continue;
            ++t;
            ++report.cases;
            const bool s = splits_completely(p, other, bound);
            Witness o;
            o.add("P", to_string(p)).add("wp", to_string(other)).add("splits", s ? "true" : "false");
            if (s) report.failures.push_back(std::move(o));
        }
    }
    if (report.witnesses.empty() && report.failures.empty()) report.notes.push_back("no Mersenne primes in range");
    return report;
}

VerificationReport verify_primality_criterion(const FieldPtr& field, std::size_t max_deg, std::uint64_t seed,
                                              std::uint64_t bound) {
    return over_primes("primality", primes_up_to(field, max_deg), 1,
                       [seed, bound](const Poly& p) { return primality_criterion_check(p, seed, bound); });
}

}  // namespace carlitz
