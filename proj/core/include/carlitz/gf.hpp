#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carlitz/error.hpp"

namespace carlitz {

/// Canonical integer form of a field element: digits (c_0..c_{s-1}) over Z/p
/// map to sum c_i p^i. Every container in the library stores this form.
using Elem = std::uint32_t;

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// GF(q), q = p^s, as Z/p[u]/(modulus). Immutable once built; share it
/// through FieldPtr.
class GaloisField {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    /// Validates p and the modulus. When s > 1 and no modulus is given the
    /// built-in table (q in {4,8,9,16,25,27,32,49,64,81}) is consulted.
    static FieldPtr create(std::uint32_t p, std::uint32_t s,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Splits q into p^s and forwards to create().
    static FieldPtr of_order(std::uint64_t q,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Default modulus for q, if the built-in table has one.
    static std::optional<std::vector<std::uint32_t>> default_modulus(std::uint64_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t s() const noexcept { return s_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return s_ == 1; }
    /// Coefficients c_0..c_s of the defining polynomial; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool same_as(const GaloisField& other) const noexcept;

    Elem add(Elem a, Elem b) const noexcept {
        switch (add_mode_) {
            case AddMode::Prime: {
                Elem r = a + b;
                return r >= p_ ? r - p_ : r;
            }
            case AddMode::Xor:
                return a ^ b;
            case AddMode::Table:
                return add_table_[static_cast<std::size_t>(a) * q_ + b];
            case AddMode::Digits:
                break;
        }
        return add_digits(a, b);
    }

    Elem neg(Elem a) const noexcept {
        switch (add_mode_) {
            case AddMode::Prime:
                return a == 0 ? 0 : p_ - a;
            case AddMode::Xor:
                return a;
            default:
                return neg_digits(a);
        }
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (s_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; pow(0, 0) == 1.
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// The unique b with b^p == a, i.e. a^(q/p).
    Elem pth_root(Elem a) const noexcept;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

private:
    enum class AddMode { Prime, Xor, Table, Digits };

    GaloisField(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus);

    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem neg_digits(Elem a) const noexcept;
    Elem slow_mul(Elem a, Elem b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t s_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    AddMode add_mode_ = AddMode::Prime;
    std::vector<Elem> add_table_;
    std::vector<Elem> exp_;           // length 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// An element bound to its field. Thin wrapper over Elem for API surfaces;
/// hot loops work on raw Elem values.
class FieldElem {
public:
    FieldElem(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint32_t> digits() const { return field_->digits(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem& o) const noexcept;

    std::string to_string() const { return std::to_string(value_); }

private:
    const GaloisField& checked(const FieldElem& o) const;

    FieldPtr field_;
    Elem value_;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElem field_arith(FieldOp op, const FieldElem& a, const FieldElem& b);
FieldElem field_pow(const FieldElem& a, std::uint64_t e);

/// Parses the decimal text form of an element, checking it lies in [0, q).
Elem parse_elem(const GaloisField& field, std::string_view text);

bool is_prime_u64(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace carlitz
