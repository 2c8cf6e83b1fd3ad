#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "specpos/errors.hpp"
#include "specpos/rng.hpp"

namespace specpos {

enum class FieldKind { Rational, PrimeField };

/// Identifies the coefficient field: the rationals, or GF(p) for a prime
/// modulus p with 2 <= p <= 2^61 - 1. The cap keeps every product inside
/// an unsigned 128-bit intermediate, so prime-field arithmetic never needs
/// big integers.
class FieldDescriptor {
  public:
    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rational, 0); }

    /// Throws InvalidInput unless p is a prime in [2, 2^61 - 1]; the check
    /// is deterministic Miller-Rabin.
    static FieldDescriptor prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_prime() const { return kind_ == FieldKind::PrimeField; }

    /// Only meaningful for prime fields.
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const FieldDescriptor&) const = default;

    std::string to_string() const;

  private:
    FieldDescriptor(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

/// An exact scalar in the field named by its descriptor. Rational values are
/// kept in lowest terms with positive denominator; prime-field values as the
/// residue in [0, p). There is no floating point anywhere in this library.
///
/// Values are immutable in practice (all operations return fresh elements)
/// and safe to share across threads.
class FieldElement {
  public:
    /// Default element is the rational zero, so containers work; compute
    /// with elements created through zero()/one()/from_*.
    FieldElement() : field_(FieldDescriptor::rationals()), value_(mpq_class(0)) {}

    static FieldElement zero(const FieldDescriptor& field);
    static FieldElement one(const FieldDescriptor& field);
    static FieldElement from_integer(const FieldDescriptor& field, long long value);

    /// Parses "3", "-7", "1/2", "-10/3". Prime fields accept the same forms
    /// and reduce them (the denominator must be nonzero mod p).
    static FieldElement from_string(const FieldDescriptor& field, const std::string& text);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    /// Equality requires matching descriptors (MixedFields otherwise).
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Canonical decimal form: "3", "-1/2"; residues print as integers.
    std::string to_string() const;

    /// Residue accessor; only valid for prime-field elements.
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    /// Rational accessor; only valid for rational elements.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  private:
    FieldElement(const FieldDescriptor& field, std::uint64_t residue)
        : field_(field), value_(residue) {}
    FieldElement(const FieldDescriptor& field, mpq_class value)
        : field_(field), value_(std::move(value)) {}

    void require_same_field(const FieldElement& rhs) const;

    FieldDescriptor field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

struct RationalSampleRange {
    long long low = -1000000;
    long long high = 1000000;
};

/// Uniform residue for GF(p); for the rationals, numerator uniform in
/// [low, high] and denominator uniform nonzero in [1, high], then reduced.
/// Deterministic given the generator state.
FieldElement sample_uniform(const FieldDescriptor& field, SeededRng& rng,
                            const RationalSampleRange& range = {});

}  // namespace specpos
