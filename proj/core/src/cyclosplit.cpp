#include "carlitz/cyclosplit.hpp"

#include "carlitz/factor.hpp"
#include "carlitz/mersenne.hpp"

namespace carlitz {

CyclotomicRing::CyclotomicRing(const Poly& prime, std::uint64_t bound)
    : prime_(prime), bound_(bound), phi_(prime.field()) {
    require_monic_prime(prime);
    phi_ = cyclotomic_xpoly(prime, bound);
}

XPoly CyclotomicRing::sigma(const Poly& a) const { return reduce(carlitz_xpoly(a, bound_)); }

namespace {

// Polynomials in x over the residue field A/wp, coefficients kept reduced.
class ResiduePoly {
public:
    ResiduePoly(const Poly* wp, std::vector<Poly> c) : wp_(wp), c_(std::move(c)) { trim(); }

    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    std::size_t length() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }

    ResiduePoly operator-(const ResiduePoly& o) const {
        std::vector<Poly> r(std::max(c_.size(), o.c_.size()), Poly::zero(wp_->field()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] - o.c_[i]) % *wp_;
        return {wp_, std::move(r)};
    }

    ResiduePoly operator*(const ResiduePoly& o) const {
        if (is_zero() || o.is_zero()) return {wp_, {}};
        std::vector<Poly> r(c_.size() + o.c_.size() - 1, Poly::zero(wp_->field()));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        for (auto& x : r) x = x % *wp_;
        return {wp_, std::move(r)};
    }

    ResiduePoly rem(const ResiduePoly& g) const {
        if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "remainder by zero");
        std::vector<Poly> r = c_;
        const Poly lead_inv = inverse(g.c_.back());
        const std::size_t n = g.c_.size();
        while (r.size() >= n) {
            const Poly factor = (r.back() * lead_inv) % *wp_;
            const std::size_t shift = r.size() - n;
            for (std::size_t i = 0; i < n; ++i) r[shift + i] = (r[shift + i] - factor * g.c_[i]) % *wp_;
            while (!r.empty() && r.back().is_zero()) r.pop_back();
        }
        return {wp_, std::move(r)};
    }

    ResiduePoly derivative() const {
        std::vector<Poly> r;
        const auto& F = wp_->field();
        const Elem p = F->p();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const Elem k = static_cast<Elem>(i % p);
            r.push_back(c_[i].scaled(k));
        }
        return {wp_, std::move(r)};
    }

    Poly inverse(const Poly& a) const {
        const ExtendedGcd e = xgcd(a, *wp_);
        if (!e.g.is_one()) throw Error(ErrorCode::DivisionByZero, "not invertible mod the residue prime");
        return e.s % *wp_;
    }

private:
    void trim() {
        for (auto& x : c_) x = x % *wp_;
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Poly* wp_;
    std::vector<Poly> c_;
};

ResiduePoly residue_gcd(ResiduePoly a, ResiduePoly b) {
    while (!b.is_zero()) {
        ResiduePoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

Poly norm_of_one_minus_lambda(const Poly& prime, std::uint64_t bound) {
    const CyclotomicRing ring(prime, bound);
    const auto& F = prime.field();
    const XPoly one = XPoly::constant(Poly::one(F));
    XPoly acc = one;
    const std::size_t d = prime.degree().value();
    for (std::size_t h = 0; h < d; ++h)
        for (const auto& monic : enumerate_monic(F, h))
            for (Elem u = 1; u < F->q(); ++u) acc = ring.multiply(acc, one - ring.sigma(monic.scaled(u)));

    if (acc.length() > 1) throw Error(ErrorCode::InvariantViolation, "norm of 1 - lambda is not a constant");
    const Poly norm = acc.coeff(0);
    if (norm != carlitz_eval(prime, Poly::one(F)) || norm != ring.phi().evaluate(Poly::one(F)))
        throw Error(ErrorCode::InvariantViolation, "norm of 1 - lambda differs from C_P(1)");
    return norm;
}

bool splits_completely(const Poly& prime, const Poly& wp, std::uint64_t bound) {
    if (wp.is_constant() || !is_irreducible(wp))
        throw Error(ErrorCode::NotMonicPrime, to_string(wp) + " is not prime");
    const Poly w = wp.monic();
    if (w == prime) throw Error(ErrorCode::SamePrime, "the residue prime must differ from P");
    const XPoly phi = cyclotomic_xpoly(prime, bound);

    const ResiduePoly bar(&w, phi.coeffs());
    // x^|wp| - x mod bar by square-and-multiply on x.
    const BigInt e = norm_size(w);
    const auto& F = w.field();
    const ResiduePoly x(&w, {Poly::zero(F), Poly::one(F)});
    ResiduePoly acc(&w, {Poly::one(F)});
    for (auto bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = (acc * acc).rem(bar);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = (acc * x).rem(bar);
    }
    const ResiduePoly fixed = residue_gcd(bar, acc - x);
    if (fixed.length() != bar.length()) return false;
    return residue_gcd(bar, bar.derivative()).length() == 1;
}

bool eisenstein_check(const Poly& prime) {
    require_monic_prime(prime);
    const TwistedPoly op = carlitz_coeffs(prime);
    const std::size_t d = prime.degree().value();
    if (op.length() != d + 1 || !op.coeff(d).is_one()) return false;
    if (op.coeff(0) != prime || (op.coeff(0) % (prime * prime)).is_zero()) return false;
    for (std::size_t i = 1; i < d; ++i)
        if (!(op.coeff(i) % prime).is_zero()) return false;
    return true;
}

VerificationReport primality_criterion_check(const Poly& prime, std::uint64_t seed, std::uint64_t bound) {
    VerificationReport report{"primality"};
    const MersenneRecord rec = mersenne_number(prime, seed);
    ++report.cases;
    Witness w;
    w.add("P", to_string(prime)).add("value", to_string(rec.value));
    const Poly norm = norm_of_one_minus_lambda(prime, bound);
    w.add("norm", to_string(norm));
    bool ok = norm == rec.value;
    if (rec.is_prime) {
        const bool one_mod = (rec.monic_associate % prime).is_one();
        const bool splits = splits_completely(prime, rec.monic_associate, bound);
        w.add("prime", "true")
            .add("one_mod_P", one_mod ? "true" : "false")
            .add("splits", splits ? "true" : "false");
        ok = ok && one_mod && splits;
    } else {
        const auto mult = mersenne_factors(rec, seed).total_multiplicity();
        w.add("prime", "false").add("prime_factors", std::to_string(mult));
        ok = ok && mult >= 2;
    }
    (ok ? report.witnesses : report.failures).push_back(std::move(w));
    return report;
}

}  // namespace carlitz
