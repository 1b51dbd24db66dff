#include "carlitz/carlitz.hpp"

#include <algorithm>
#include <map>

#include "carlitz/factor.hpp"

namespace carlitz {

namespace {

template <class T>
void trim_coeffs(std::vector<T>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void check_expansion(const Poly& m, std::uint64_t bound) {
    const std::size_t d = m.degree().value();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < d; ++i) {
        size *= m.gf().q();
        if (size > bound)
            throw Error(ErrorCode::ExpansionTooLarge, "q^deg(m) exceeds the expansion bound " + std::to_string(bound));
    }
}

}  // namespace

TwistedPoly::TwistedPoly(FieldPtr field, std::vector<Poly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_) c.check_same_field(Poly(field_));
    trim_coeffs(c_);
}

TwistedPoly TwistedPoly::identity(const FieldPtr& field) { return TwistedPoly(field, {Poly::one(field)}); }

Poly TwistedPoly::apply(const Poly& x) const {
    Poly acc = Poly::zero(field_);
    Poly xi = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) xi = frobenius(xi);
        acc += c_[i] * xi;
    }
    return acc;
}

TwistedPoly twisted_mul(const TwistedPoly& u, const TwistedPoly& v) {
    if (!u.field()->same_as(*v.field())) throw Error(ErrorCode::FieldMismatch, "twisted polynomials over different fields");
    if (u.length() == 0 || v.length() == 0) return TwistedPoly(u.field());
    std::vector<Poly> out(u.length() + v.length() - 1, Poly::zero(u.field()));
    for (std::size_t i = 0; i < u.length(); ++i) {
        if (u.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.length(); ++j)
            out[i + j] += u.coeffs()[i] * frobenius(v.coeffs()[j], i);
    }
    return TwistedPoly(u.field(), std::move(out));
}

TwistedPoly carlitz_coeffs(const Poly& m) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroInput, "C_0 is the zero operator");
    const auto& F = m.field();
    const TwistedPoly c_t(F, {Poly::t(F), Poly::one(F)});
    const std::size_t d = m.length() - 1;
    TwistedPoly acc(F, {Poly::constant(F, m.coeff(d))});
    for (std::size_t i = d; i-- > 0;) {
        acc = twisted_mul(c_t, acc);
        std::vector<Poly> c = acc.coeffs();
        c[0] += Poly::constant(F, m.coeff(i));
        acc = TwistedPoly(F, std::move(c));
    }
    return acc;
}

Poly carlitz_eval(const Poly& m, const Poly& x, const std::optional<Poly>& modulus) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroInput, "C_m with m = 0");
    m.check_same_field(x);
    const auto& F = m.field();
    const Poly t = Poly::t(F);
    std::optional<Poly> mod;
    if (modulus) {
        m.check_same_field(*modulus);
        if (modulus->is_constant()) throw Error(ErrorCode::ModulusConstant, "carlitz_eval modulus must have positive degree");
        mod = modulus->monic();
    }
    Poly xi = mod ? x % *mod : x;
    Poly acc = Poly::zero(F);
    for (std::size_t i = 0; i < m.length(); ++i) {
        if (i > 0) {
            if (mod) {
                xi = (t * xi + frobenius_mod(xi, *mod)) % *mod;
            } else {
                xi = t * xi + frobenius(xi);
            }
        }
        if (m.coeff(i) != 0) acc += xi.scaled(m.coeff(i));
    }
    return mod ? acc % *mod : acc;
}

XPoly::XPoly(FieldPtr field, std::vector<Poly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_) c.check_same_field(Poly(field_));
    trim();
}

XPoly XPoly::x(const FieldPtr& field) { return XPoly(field, {Poly::zero(field), Poly::one(field)}); }

XPoly XPoly::constant(const Poly& c) { return XPoly(c.field(), {c}); }

void XPoly::trim() { trim_coeffs(c_); }

Poly XPoly::evaluate(const Poly& value) const {
    Poly acc = Poly::zero(field_);
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * value + c_[j];
    return acc;
}

XPoly XPoly::operator+(const XPoly& o) const {
    std::vector<Poly> c = c_;
    if (c.size() < o.c_.size()) c.resize(o.c_.size(), Poly::zero(field_));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[j] += o.c_[j];
    return XPoly(field_, std::move(c));
}

XPoly XPoly::operator-(const XPoly& o) const {
    std::vector<Poly> c = c_;
    if (c.size() < o.c_.size()) c.resize(o.c_.size(), Poly::zero(field_));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[j] -= o.c_[j];
    return XPoly(field_, std::move(c));
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (c_.empty() || o.c_.empty()) return XPoly(field_);
    std::vector<Poly> c(c_.size() + o.c_.size() - 1, Poly::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
    }
    return XPoly(field_, std::move(c));
}

std::pair<XPoly, XPoly> divrem_monic(const XPoly& f, const XPoly& g) {
    if (!g.is_monic()) throw Error(ErrorCode::InvalidArgument, "divisor must be monic in x");
    const auto& F = f.field();
    std::vector<Poly> r = f.coeffs();
    const std::size_t n = g.length();
    if (r.size() < n) return {XPoly(F), f};
    std::vector<Poly> quo(r.size() - n + 1, Poly::zero(F));
    for (std::size_t top = r.size(); top-- > n - 1;) {
        if (r[top].is_zero()) continue;
        const Poly c = r[top];
        const std::size_t shift = top - (n - 1);
        quo[shift] = c;
        for (std::size_t i = 0; i < n; ++i)
            if (!g.coeffs()[i].is_zero()) r[shift + i] -= c * g.coeffs()[i];
    }
    return {XPoly(F, std::move(quo)), XPoly(F, std::move(r))};
}

std::string to_string(const XPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t j = f.length(); j-- > 0;) {
        const Poly& c = f.coeffs()[j];
        if (c.is_zero()) continue;
        if (!out.empty()) out.push_back('+');
        if (j == 0) {
            out += "(" + to_string(c) + ")";
            continue;
        }
        if (!c.is_one()) out += "(" + to_string(c) + ")*";
        out.push_back('x');
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

XPoly carlitz_xpoly(const Poly& m, std::uint64_t bound) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroInput, "C_0 is the zero operator");
    check_expansion(m, bound);
    const TwistedPoly op = carlitz_coeffs(m);
    const auto& F = m.field();
    std::size_t top = 1;
    for (std::size_t i = 1; i < op.length(); ++i) top *= F->q();
    std::vector<Poly> c(top + 1, Poly::zero(F));
    std::size_t power = 1;
    for (std::size_t i = 0; i < op.length(); ++i) {
        c[power] = op.coeffs()[i];
        power *= F->q();
    }
    return XPoly(F, std::move(c));
}

XPoly cyclotomic_xpoly(const Poly& m, std::uint64_t bound) {
    if (m.is_constant()) throw Error(ErrorCode::ConstantInput, "cyclotomic polynomial needs deg(m) >= 1");
    check_expansion(m, bound);
    const auto& F = m.field();
    const Poly mm = m.monic();
    const Factorization fac = factorize(mm);

    // Monic divisors as exponent vectors, visited in (degree, index) order so
    // every proper divisor is finished before the divisors it divides.
    using Exps = std::vector<std::uint32_t>;
    std::vector<Exps> divisors{Exps(fac.factors.size(), 0)};
    for (std::size_t k = 0; k < fac.factors.size(); ++k) {
        const std::size_t existing = divisors.size();
        for (std::size_t i = 0; i < existing; ++i)
            for (std::uint32_t e = 1; e <= fac.factors[k].exponent; ++e) {
                Exps d = divisors[i];
                d[k] = e;
                divisors.push_back(std::move(d));
            }
    }
    auto to_poly = [&](const Exps& e) {
        Poly r = Poly::one(F);
        for (std::size_t k = 0; k < e.size(); ++k) r *= pow(fac.factors[k].prime, e[k]);
        return r;
    };
    std::vector<std::pair<Poly, Exps>> ordered;
    for (auto& e : divisors) ordered.emplace_back(to_poly(e), std::move(e));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return enumeration_order(a.first, b.first) < 0; });

    std::vector<XPoly> phi;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        const auto& [a, ea] = ordered[i];
        if (a.is_one()) {
            phi.push_back(XPoly::x(F));
            continue;
        }
        XPoly denom = XPoly::constant(Poly::one(F));
        for (std::size_t j = 0; j < i; ++j) {
            const auto& eb = ordered[j].second;
            bool divides = true;
            for (std::size_t k = 0; k < ea.size(); ++k)
                if (eb[k] > ea[k]) divides = false;
            if (divides) denom = denom * phi[j];
        }
        auto [quo, rem] = divrem_monic(carlitz_xpoly(a, bound), denom);
        if (!rem.is_zero())
            throw Error(ErrorCode::InvariantViolation, "C_a(x) not divisible by its divisor cyclotomics");
        phi.push_back(std::move(quo));
    }
    return phi.back();
}

}  // namespace carlitz
