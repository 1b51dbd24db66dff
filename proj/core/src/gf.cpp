#include "carlitz/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace carlitz {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::UnsupportedQ: return "UnsupportedQ";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ModulusConstant: return "ModulusConstant";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ConstantInput: return "ConstantInput";
        case ErrorCode::RangeOutOfBounds: return "RangeOutOfBounds";
        case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
        case ErrorCode::QIsTwo: return "QIsTwo";
        case ErrorCode::NotMonicPrime: return "NotMonicPrime";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::SamePrime: return "SamePrime";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Conway polynomials, low coefficient first.
const std::map<std::uint64_t, std::vector<std::uint32_t>>& default_moduli() {
    static const std::map<std::uint64_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {2, 2, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 6, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
    };
    return table;
}

// Dense polynomials over Z/p, used only while validating a modulus.
using ModP = std::vector<std::uint32_t>;

void trim(ModP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModP rem_mod_p(ModP a, const ModP& b, std::uint32_t p) {
    trim(a);
    const std::uint64_t lead_inv = [&] {
        std::uint64_t x = b.back(), r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool irreducible_mod_p(const ModP& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    // Trial division by every monic polynomial of degree <= n/2.
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            ModP g(k + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[k] = 1;
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> GaloisField::default_modulus(std::uint64_t q) {
    const auto& table = default_moduli();
    if (auto it = table.find(q); it != table.end()) return it->second;
    return std::nullopt;
}

FieldPtr GaloisField::create(std::uint32_t p, std::uint32_t s,
                             std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_u64(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorCode::UnsupportedQ, "field order exceeds 2^20");
    }
    std::vector<std::uint32_t> mod;
    if (s > 1) {
        if (!modulus) {
            modulus = default_modulus(q);
            if (!modulus)
                throw Error(ErrorCode::UnsupportedQ,
                            "no built-in modulus for q = " + std::to_string(q) + "; supply one");
        }
        mod = *modulus;
        if (mod.size() != s + 1u)
            throw Error(ErrorCode::InvalidArgument, "modulus must have exactly s+1 coefficients");
        for (auto c : mod)
            if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        if (mod.back() != 1) throw Error(ErrorCode::ReducibleModulus, "modulus is not monic");
        if (!irreducible_mod_p(mod, p))
            throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z/p");
    }
    return FieldPtr(new GaloisField(p, s, std::move(mod)));
}

FieldPtr GaloisField::of_order(std::uint64_t q, std::optional<std::vector<std::uint32_t>> modulus) {
    if (q < 2) throw Error(ErrorCode::UnsupportedQ, "q must be a prime power >= 2");
    if (q > kMaxOrder) throw Error(ErrorCode::UnsupportedQ, "field order exceeds 2^20");
    const auto primes = prime_factors_u64(q);
    if (primes.size() != 1)
        throw Error(ErrorCode::NonPrimeP, std::to_string(q) + " is not a prime power");
    std::uint32_t s = 0;
    for (std::uint64_t t = q; t > 1; t /= primes[0]) ++s;
    return create(static_cast<std::uint32_t>(primes[0]), s, std::move(modulus));
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < s_; ++i) q_ *= p_;
    build_tables();
}

bool GaloisField::same_as(const GaloisField& other) const noexcept {
    return this == &other || (p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_);
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem GaloisField::from_digits(std::span<const std::uint32_t> d) const {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return v;
}

Elem GaloisField::add_digits(Elem a, Elem b) const noexcept {
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem GaloisField::neg_digits(Elem a) const noexcept {
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        const Elem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

// Schoolbook product of digit vectors reduced by the modulus.
Elem GaloisField::slow_mul(Elem a, Elem b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * s_, 0);
    for (std::uint32_t i = 0; i < s_; ++i)
        for (std::uint32_t j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    for (std::size_t k = 2 * s_ - 1; k >= s_; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= s_; ++i) {
            const std::uint64_t sub = c * modulus_[i] % p_;
            prod[k - s_ + i] = (prod[k - s_ + i] + p_ - sub) % p_;
        }
    }
    std::vector<std::uint32_t> out(s_);
    for (std::uint32_t i = 0; i < s_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out);
}

void GaloisField::build_tables() {
    if (s_ == 1) {
        add_mode_ = AddMode::Prime;
        return;
    }
    if (p_ == 2) {
        add_mode_ = AddMode::Xor;
    } else if (q_ <= 1024) {
        add_mode_ = AddMode::Table;
        add_table_.resize(std::size_t{q_} * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    } else {
        add_mode_ = AddMode::Digits;
    }

    // Find a generator of the multiplicative group, then tabulate its powers.
    const std::uint32_t order = q_ - 1;
    const auto divisors = prime_factors_u64(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem gen = 0;
    for (Elem g = 2; g < q_ && gen == 0; ++g) {
        bool ok = true;
        for (auto r : divisors)
            if (slow_pow(g, order / r) == 1) {
                ok = false;
                break;
            }
        if (ok) gen = g;
    }
    exp_.resize(2 * std::size_t{order});
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (s_ == 1) return pow(a, p_ - 2);
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem GaloisField::pth_root(Elem a) const noexcept { return pow(a, q_ / p_); }

FieldElem::FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (value_ >= field_->q()) throw Error(ErrorCode::InvalidArgument, "element out of range");
}

const GaloisField& FieldElem::checked(const FieldElem& o) const {
    if (!field_->same_as(*o.field_)) throw Error(ErrorCode::FieldMismatch, "operands from different fields");
    return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field_, checked(o).add(value_, o.value_)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field_, checked(o).sub(value_, o.value_)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { return {field_, checked(o).mul(value_, o.value_)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const { return {field_, checked(o).div(value_, o.value_)}; }
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElem::operator==(const FieldElem& o) const noexcept {
    return value_ == o.value_ && field_->same_as(*o.field_);
}

FieldElem field_arith(FieldOp op, const FieldElem& a, const FieldElem& b) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown field op");
}

FieldElem field_pow(const FieldElem& a, std::uint64_t e) { return a.pow(e); }

Elem parse_elem(const GaloisField& field, std::string_view text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
    if (v >= field.q())
        throw Error(ErrorCode::ParseError, "field element " + std::string(text) + " not in [0, q)");
    return static_cast<Elem>(v);
}

}  // namespace carlitz
