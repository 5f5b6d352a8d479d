#include "rghw/field.hpp"

#include <ostream>
#include <string>

namespace rghw {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) {
    throw InvalidArgument("field modulus " + std::to_string(q) + " is not prime");
  }
}

FieldElement PrimeField::element(std::int64_t value) const {
  return FieldElement(reduce(value), q_);
}
FieldElement PrimeField::zero() const { return FieldElement(0, q_); }
FieldElement PrimeField::one() const { return FieldElement(1 % q_, q_); }

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw DivisionByZero();
  std::int64_t old_r = a, r = q_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % q_;
  Residue base = a % q_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ContextMismatch("field elements of F_" + std::to_string(a.modulus()) +
                          " and F_" + std::to_string(b.modulus()) + " combined");
  }
}

std::uint64_t wide(Residue v) { return v; }

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(static_cast<Residue>((wide(a.value_) + b.value_) % a.modulus_),
                      a.modulus_);
}

FieldElement operator-(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(
      static_cast<Residue>((wide(a.value_) + a.modulus_ - b.value_) % a.modulus_),
      a.modulus_);
}

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(static_cast<Residue>(wide(a.value_) * b.value_ % a.modulus_),
                      a.modulus_);
}

FieldElement operator-(FieldElement a) {
  return FieldElement(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(PrimeField(modulus_).inv(value_), modulus_);
}

FieldElement operator/(FieldElement a, FieldElement b) {
  check_same(a, b);
  return a * b.inverse();
}

FieldElement add(FieldElement a, FieldElement b) { return a + b; }
FieldElement mul(FieldElement a, FieldElement b) { return a * b; }
FieldElement inv(FieldElement a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value();
}

}  // namespace rghw
