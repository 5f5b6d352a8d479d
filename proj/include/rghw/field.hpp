#pragma once

#include <cstdint>
#include <iosfwd>

#include "rghw/error.hpp"

namespace rghw {

/// Raw residues are stored as 32-bit values; products go through 64 bits.
using Residue = std::uint32_t;

class FieldElement;

/// The prime field F_q.  Besides producing FieldElement values it exposes
/// raw residue arithmetic, which the linear algebra and enumeration kernels
/// use directly.
class PrimeField {
 public:
  /// Throws InvalidArgument unless q is a prime (checked by trial division).
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }

  FieldElement element(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  Residue reduce(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  /// Extended Euclid.  Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t n) noexcept;

/// An element of F_q that carries its modulus; arithmetic between different
/// moduli throws ContextMismatch.
class FieldElement {
 public:
  FieldElement(Residue value, std::uint32_t modulus) noexcept
      : value_(value), modulus_(modulus) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a);

  FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
  FieldElement& operator-=(FieldElement b) { return *this = *this - b; }
  FieldElement& operator*=(FieldElement b) { return *this = *this * b; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Residue value_;
  std::uint32_t modulus_;
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace rghw
