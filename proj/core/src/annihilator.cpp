#include "carlitz/annihilator.hpp"

#include "carlitz/carlitz.hpp"
#include "carlitz/mersenne.hpp"

namespace carlitz {

namespace {

bool annihilates(const Poly& a, const Poly& prime) {
    return carlitz_eval(a, Poly::one(prime.field()), prime).is_zero();
}

}  // namespace

AnnihilatorRecord carlitz_annihilator(const Poly& prime, std::uint64_t seed) {
    require_monic_prime(prime);
    const auto& F = prime.field();
    const Poly p_minus_1 = prime - Poly::one(F);
    Poly candidate = p_minus_1;
    const Factorization fac = factorize(candidate, seed);
    for (const auto& [ell, e] : fac.factors) {
        for (std::uint32_t k = 0; k < e; ++k) {
            Poly reduced = candidate / ell;
            if (!annihilates(reduced, prime)) break;
            candidate = std::move(reduced);
        }
    }

    if (!annihilates(candidate, prime))
        throw Error(ErrorCode::InvariantViolation, "annihilator does not annihilate 1 mod " + to_string(prime));
    if (!(p_minus_1 % candidate).is_zero())
        throw Error(ErrorCode::InvariantViolation, "annihilator does not divide P - 1");
    for (const auto& [ell, e] : factorize(candidate, seed).factors)
        if (annihilates(candidate / ell, prime))
            throw Error(ErrorCode::InvariantViolation, "annihilator is not minimal");
    return {prime, std::move(candidate), true};
}

Poly annihilator_bruteforce(const Poly& prime) {
    require_monic_prime(prime);
    const std::size_t n = prime.degree().value();
    if (n > 4) throw Error(ErrorCode::DegreeTooLarge, "brute-force annihilator is limited to deg P <= 4");
    const auto& F = prime.field();

    std::optional<Poly> found;
    for (std::size_t d = 0; d <= n && !found; ++d)
        for (const auto& a : enumerate_monic(F, d))
            if (annihilates(a, prime)) {
                found = a;
                break;
            }
    if (!found) throw Error(ErrorCode::InvariantViolation, "no annihilator of degree <= deg P");

    const std::size_t top = found->degree().value();
    for (std::size_t d = 0; d <= top; ++d)
        for (const auto& a : enumerate_monic(F, d))
            if (annihilates(a, prime) != (a % *found).is_zero())
                throw Error(ErrorCode::InvariantViolation,
                            "ideal property fails at a = " + to_string(a) + " for P = " + to_string(prime));
    return *found;
}

VerificationReport check_mersenne_divisor_annihilator(const Poly& prime, std::uint64_t seed) {
    const MersenneRecord rec = mersenne_number(prime, seed);
    VerificationReport report{"annihilator"};
    for (const auto& [q, e] : mersenne_factors(rec, seed).factors) {
        ++report.cases;
        const AnnihilatorRecord ann = carlitz_annihilator(q, seed);
        const bool equals_p = ann.annihilator == prime;
        const bool is_prime = is_irreducible(ann.annihilator);
        const bool divides = carlitz_eval(ann.annihilator, Poly::one(prime.field()), q).is_zero();
        Witness w;
        w.add("P", to_string(prime))
            .add("Q", to_string(q))
            .add("annihilator", to_string(ann.annihilator))
            .add("annihilator_prime", is_prime ? "true" : "false");
        if (equals_p && is_prime && divides)
            report.witnesses.push_back(std::move(w));
        else
            report.failures.push_back(std::move(w));
    }
    return report;
}

}  // namespace carlitz
