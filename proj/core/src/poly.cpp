#include "carlitz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace carlitz {

namespace {

using Vec = std::vector<Elem>;

constexpr std::size_t kKaratsubaThreshold = 32;

void trim_vec(Vec& v) noexcept {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void add_into(const GaloisField& F, Vec& acc, std::span<const Elem> b, std::size_t offset = 0) {
    if (acc.size() < b.size() + offset) acc.resize(b.size() + offset, 0);
    for (std::size_t i = 0; i < b.size(); ++i) acc[i + offset] = F.add(acc[i + offset], b[i]);
}

void sub_into(const GaloisField& F, Vec& acc, std::span<const Elem> b) {
    if (acc.size() < b.size()) acc.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) acc[i] = F.sub(acc[i], b[i]);
}

Vec mul_schoolbook(const GaloisField& F, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size() + b.size() - 1;
    if (F.is_prime_field()) {
        // Products are below 2^40, so partial sums cannot overflow for any
        // length this library handles.
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::uint64_t ai = a[i];
            if (ai == 0) continue;
            std::uint64_t* row = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
        }
        Vec out(n);
        const std::uint64_t p = F.p();
        for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Elem>(acc[k] % p);
        return out;
    }
    Vec out(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

Vec mul_vec(const GaloisField& F, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) return mul_schoolbook(F, a, b);

    const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto lo = [h](std::span<const Elem> v) { return v.first(std::min(h, v.size())); };
    auto hi = [h](std::span<const Elem> v) { return v.size() > h ? v.subspan(h) : std::span<const Elem>{}; };

    Vec out(a.size() + b.size() - 1, 0);
    const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    if (a1.empty() || b1.empty()) {
        // Unbalanced: one operand fits entirely in the low half.
        const bool a_short = a1.empty();
        const auto s = a_short ? a : b;
        const auto l0 = a_short ? b0 : a0;
        const auto l1 = a_short ? b1 : a1;
        add_into(F, out, mul_vec(F, s, l0));
        add_into(F, out, mul_vec(F, s, l1), h);
        return out;
    }

    Vec z0 = mul_vec(F, a0, b0);
    Vec z2 = mul_vec(F, a1, b1);
    Vec sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
    add_into(F, sa, a1);
    add_into(F, sb, b1);
    Vec z1 = mul_vec(F, sa, sb);
    sub_into(F, z1, z0);
    sub_into(F, z1, z2);

    add_into(F, out, z0);
    add_into(F, out, z1, h);
    add_into(F, out, z2, 2 * h);
    out.resize(a.size() + b.size() - 1);
    return out;
}

// a := a mod m, m nonzero; returns the quotient when requested.
void rem_in_place(const GaloisField& F, Vec& a, std::span<const Elem> m, Vec* quotient) {
    trim_vec(a);
    const std::size_t n = m.size();
    if (quotient) quotient->clear();
    if (a.size() < n) return;
    if (quotient) quotient->assign(a.size() - n + 1, 0);
    const Elem lead_inv = F.inv(m.back());
    const bool monic = m.back() == 1;
    for (std::size_t top = a.size(); top-- >= n;) {
        const Elem c = monic ? a[top] : F.mul(a[top], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = top - (n - 1);
        if (quotient) (*quotient)[shift] = c;
        const Elem nc = F.neg(c);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (m[i] != 0) a[shift + i] = F.add(a[shift + i], F.mul(nc, m[i]));
        a[top] = 0;
        if (top == n - 1) break;
    }
    trim_vec(a);
    if (quotient) trim_vec(*quotient);
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    for (auto c : c_)
        if (c >= field_->q()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    trim();
}

Poly Poly::constant(const FieldPtr& field, Elem c) { return Poly(field, Vec{c}); }

Poly Poly::monomial(const FieldPtr& field, Elem c, std::size_t k) {
    Vec v(k + 1, 0);
    v[k] = c;
    return Poly(field, std::move(v));
}

void Poly::trim() noexcept { trim_vec(c_); }

void Poly::check_same_field(const Poly& o) const {
    if (field_ != o.field_ && !field_->same_as(*o.field_))
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(ErrorCode::ZeroInput, "zero has no monic associate");
    if (is_monic()) return *this;
    return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Elem c) const {
    if (c == 0) return Poly(field_);
    Poly r = *this;
    for (auto& x : r.c_) x = field_->mul(x, c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    Poly r = *this;
    add_into(*field_, r.c_, o.c_);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(o);
    Poly r = *this;
    sub_into(*field_, r.c_, o.c_);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    return Poly(field_, mul_vec(*field_, c_, o.c_));
}

Poly Poly::operator/(const Poly& o) const { return divrem(*this, o).first; }

Poly Poly::operator%(const Poly& o) const {
    check_same_field(o);
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "reduction modulo zero");
    Poly r = *this;
    rem_in_place(*field_, r.c_, o.c_, nullptr);
    return r;
}

bool Poly::operator==(const Poly& o) const noexcept {
    return c_ == o.c_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g) {
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Sub: return f - g;
        case PolyOp::Mul: return f * g;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown poly op");
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    f.check_same_field(g);
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    Vec r(f.coeffs().begin(), f.coeffs().end()), q;
    rem_in_place(f.gf(), r, g.coeffs(), &q);
    return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

Poly gcd(const Poly& f, const Poly& g) {
    f.check_same_field(g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd xgcd(const Poly& f, const Poly& g) {
    f.check_same_field(g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    const auto& F = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [quo, rem] = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    const Elem li = F->inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, const BigInt& e, const Poly& m) {
    base.check_same_field(m);
    if (m.is_constant()) throw Error(ErrorCode::ModulusConstant, "powmod needs a modulus of positive degree");
    if (sgn(e) < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    Poly result = Poly::one(m.field()) % m;
    if (sgn(e) == 0) return result;
    const Poly b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    BigInt be;
    mpz_import(be.get_mpz_t(), 1, 1, sizeof(e), 0, 0, &e);
    return powmod(base, be, m);
}

Poly pow(const Poly& base, std::uint64_t e) {
    Poly result = Poly::one(base.field());
    Poly b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

BigInt norm_size(const Poly& m) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroInput, "|0| is undefined");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), m.gf().q(), m.degree().value());
    return r;
}

Poly derivative(const Poly& f) {
    const auto& F = f.gf();
    if (f.length() <= 1) return Poly::zero(f.field());
    Vec out(f.length() - 1);
    for (std::size_t i = 1; i < f.length(); ++i) {
        const Elem k = static_cast<Elem>(i % F.p());  // i * 1 in the prime subfield
        out[i - 1] = F.mul(f.coeff(i), k);
    }
    return Poly(f.field(), std::move(out));
}

Poly frobenius(const Poly& f) { return frobenius(f, 1); }

Poly frobenius(const Poly& f, std::size_t k) {
    if (f.is_constant() || k == 0) return f;
    std::size_t step = 1;
    for (std::size_t i = 0; i < k; ++i) step *= f.gf().q();
    Vec out((f.length() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < f.length(); ++i) out[i * step] = f.coeff(i);
    return Poly(f.field(), std::move(out));
}

Poly frobenius_mod(const Poly& f, const Poly& m) { return frobenius(f % m) % m; }

Poly pth_root(const Poly& f) {
    const auto& F = f.gf();
    const std::size_t p = F.p();
    if (f.is_zero()) return f;
    Vec out((f.length() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < f.length(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % p != 0) throw Error(ErrorCode::InvalidArgument, "not a p-th power");
        out[i / p] = F.pth_root(f.coeff(i));
    }
    return Poly(f.field(), std::move(out));
}

FrobeniusMap::FrobeniusMap(const Poly& modulus) : mod_(modulus.is_zero() ? modulus : modulus.monic()) {
    if (mod_.is_constant()) throw Error(ErrorCode::ModulusConstant, "Frobenius map needs a modulus of positive degree");
    const std::size_t n = mod_.degree().value();
    const Poly tq = frobenius_mod(Poly::t(mod_.field()), mod_);
    Poly row = Poly::one(mod_.field()) % mod_;
    rows_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec r(row.coeffs().begin(), row.coeffs().end());
        r.resize(n, 0);
        rows_.push_back(std::move(r));
        row = mulmod(row, tq, mod_);
    }
}

Poly FrobeniusMap::apply(const Poly& h_in) const {
    const Poly h = h_in % mod_;
    const auto& F = mod_.gf();
    const std::size_t n = rows_.size();
    if (F.is_prime_field()) {
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < h.length(); ++i) {
            const std::uint64_t c = h.coeff(i);
            if (c == 0) continue;
            const Elem* row = rows_[i].data();
            for (std::size_t j = 0; j < n; ++j) acc[j] += c * row[j];
        }
        Vec out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<Elem>(acc[j] % F.p());
        return Poly(mod_.field(), std::move(out));
    }
    Vec out(n, 0);
    for (std::size_t i = 0; i < h.length(); ++i) {
        const Elem c = h.coeff(i);
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(c, rows_[i][j]));
    }
    return Poly(mod_.field(), std::move(out));
}

std::optional<std::uint64_t> monic_count(const GaloisField& field, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / field.q()) return std::nullopt;
        n *= field.q();
    }
    return n;
}

Poly monic_from_index(const FieldPtr& field, std::size_t d, std::uint64_t index) {
    const auto count = monic_count(*field, d);
    if (count && index >= *count)
        throw Error(ErrorCode::RangeOutOfBounds, "monic index " + std::to_string(index) + " out of range");
    Vec v(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        v[i] = static_cast<Elem>(index % field->q());
        index /= field->q();
    }
    v[d] = 1;
    return Poly(field, std::move(v));
}

std::optional<std::uint64_t> monic_index(const Poly& f) {
    if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "monic_index needs a monic polynomial");
    std::uint64_t idx = 0;
    const std::uint64_t q = f.gf().q();
    for (std::size_t i = f.length() - 1; i-- > 0;) {
        if (idx > (std::numeric_limits<std::uint64_t>::max() - f.coeff(i)) / q) return std::nullopt;
        idx = idx * q + f.coeff(i);
    }
    return idx;
}

std::vector<Poly> enumerate_monic(const FieldPtr& field, std::size_t d, std::uint64_t begin, std::uint64_t end) {
    const auto count = monic_count(*field, d);
    if (begin > end || (count && end > *count))
        throw Error(ErrorCode::RangeOutOfBounds, "enumeration range [" + std::to_string(begin) + ", " +
                                                     std::to_string(end) + ") exceeds q^d");
    std::vector<Poly> out;
    out.reserve(end - begin);
    for (std::uint64_t i = begin; i < end; ++i) out.push_back(monic_from_index(field, d, i));
    return out;
}

std::vector<Poly> enumerate_monic(const FieldPtr& field, std::size_t d) {
    const auto count = monic_count(*field, d);
    if (!count) throw Error(ErrorCode::RangeOutOfBounds, "q^d overflows the index space");
    return enumerate_monic(field, d, 0, *count);
}

std::strong_ordering enumeration_order(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (a.is_zero()) return std::strong_ordering::equal;
    const std::size_t d = a.length() - 1;
    for (std::size_t i = d; i-- > 0;)
        if (auto c = a.coeff(i) <=> b.coeff(i); c != 0) return c;
    return a.leading() <=> b.leading();
}

Poly parse_poly(const FieldPtr& field, std::string_view text_in, char var) {
    std::string text;
    for (char ch : text_in)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    auto fail = [&](const std::string& why) -> Error {
        return Error(ErrorCode::ParseError, "cannot parse '" + std::string(text_in) + "': " + why);
    };
    if (text.empty()) throw fail("empty input");

    const auto& F = *field;
    Vec acc;
    std::size_t pos = 0;
    auto read_uint = [&](std::uint64_t& out) {
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc() || ptr == first) return false;
        pos += static_cast<std::size_t>(ptr - first);
        return true;
    };
    constexpr std::uint64_t kMaxExponent = 1u << 24;

    while (true) {
        std::uint64_t coeff = 1, exponent = 0;
        bool have_coeff = false, have_var = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (!read_uint(coeff)) throw fail("bad coefficient");
            if (coeff >= F.q()) throw fail("coefficient " + std::to_string(coeff) + " not in [0, q)");
            have_coeff = true;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                if (pos >= text.size() || text[pos] != var) throw fail("expected variable after '*'");
            }
        }
        if (pos < text.size() && text[pos] == var) {
            ++pos;
            have_var = true;
            exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (!read_uint(exponent)) throw fail("bad exponent");
                if (exponent > kMaxExponent) throw fail("exponent too large");
            }
        }
        if (!have_coeff && !have_var) throw fail("expected a term at offset " + std::to_string(pos));
        if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
        acc[exponent] = F.add(acc[exponent], static_cast<Elem>(coeff));
        if (pos == text.size()) break;
        if (text[pos] != '+') throw fail("unexpected '" + std::string(1, text[pos]) + "'");
        ++pos;
    }
    return Poly(field, std::move(acc));
}

std::string to_string(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.length(); i-- > 0;) {
        const Elem c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out.push_back('+');
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
            out.push_back('*');
        }
        out.push_back(var);
        if (i > 1) {
            out.push_back('^');
            out += std::to_string(i);
        }
    }
    return out;
}

}  // namespace carlitz
