#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rghw/field.hpp"

namespace rghw {

/// Upper bound on the number of ring variables, including the auxiliary
/// variable adjoined by elimination.
inline constexpr std::size_t kMaxVariables = 10;

/// Largest exponent accepted by the polynomial parser.
inline constexpr std::uint32_t kMaxParsedExponent = 1'000'000;

/// t^a = t1^a1 ... ts^as, stored inline.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  explicit Monomial(std::span<const std::uint32_t> exponents);

  /// The variable t_{index+1} in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t exponent = 1);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) noexcept { exps_[i] = e; }
  std::span<const std::uint32_t> exponents() const noexcept {
    return {exps_.data(), size_};
  }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; throws InvalidArgument when divisor does not divide.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Supported monomial orders.  `elimination` ranks by the exponent of t1
/// first and breaks ties with grevlex; it is used internally to eliminate
/// an auxiliary first variable.
enum class OrderKind { grevlex, lex, grlex, elimination };

class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;
  /// Accepts "grevlex", "lex", "grlex".
  static MonomialOrder parse(std::string_view name);

  /// Throws ContextMismatch when the variable counts differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Same as compare() without the size check.
  std::strong_ordering compare_unchecked(const Monomial& a,
                                         const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare_unchecked(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::grevlex;
};

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a,
                             const Monomial& b);

/// S = F_q[t1..ts] together with the monomial order that keys term storage.
class PolynomialRing {
 public:
  PolynomialRing(PrimeField field, std::size_t nvars, MonomialOrder order = {});

  static std::shared_ptr<const PolynomialRing> make(std::uint32_t q,
                                                    std::size_t nvars,
                                                    MonomialOrder order = {});

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::shared_ptr<const PolynomialRing> with_order(MonomialOrder order) const;
  /// All monomials of total degree d, sorted decreasing in the ring order.
  std::vector<Monomial> monomials_of_degree(std::uint64_t d) const;

  friend bool operator==(const PolynomialRing&, const PolynomialRing&) = default;

 private:
  PrimeField field_;
  std::size_t nvars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

struct Term {
  Monomial monomial;
  Residue coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial with nonzero coefficients stored in decreasing ring order,
/// so the leading term is terms().front().
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Residue c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);
  /// Combines like terms, sorts and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws InvalidArgument for the zero polynomial.
  const Monomial& leading_monomial() const;
  FieldElement leading_coefficient() const;
  FieldElement coefficient(const Monomial& m) const;

  /// Every monomial has total degree d (the zero polynomial qualifies).
  bool is_homogeneous(std::uint64_t d) const noexcept;
  bool is_homogeneous() const noexcept;
  /// Largest total degree; nullopt for zero.
  std::optional<std::uint64_t> total_degree() const noexcept;

  /// Re-keys the terms under another ring with the same field and variables.
  Polynomial in_ring(RingPtr other) const;
  Polynomial monic() const;
  /// Everything but the leading term.
  Polynomial tail() const;
  Polynomial scaled(Residue c) const;
  Polynomial scaled(FieldElement c) const;
  /// this * c * m.  Order is preserved because monomial orders are
  /// multiplicative.
  Polynomial mul_term(const Monomial& m, Residue c) const;

  Residue evaluate(std::span<const Residue> point) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  friend Polynomial axpy(const Polynomial& f, Residue c, const Monomial& m,
                         const Polynomial& g);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f - c * m * g, the elementary reduction step.
Polynomial axpy(const Polynomial& f, Residue c, const Monomial& m,
                const Polynomial& g);

/// The order-maximal monomial of f under `order` (independent of the order
/// keying f's storage).  Throws InvalidArgument for f == 0.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Throws ContextMismatch when a and b live in different rings.
void require_same_ring(const PolynomialRing& a, const PolynomialRing& b);

/// Grammar: terms joined by + or -, factors joined by * (optional before a
/// variable), optional ^exponent on each factor, variables t1..ts, unary
/// minus, whitespace ignored.
Polynomial parse_polynomial(std::string_view text, RingPtr ring);
/// Comma-separated list of polynomials; empty text gives an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, RingPtr ring);

std::string format_monomial(const Monomial& m);
/// Terms in decreasing ring order, coefficients in [0, q), joined by " + ".
std::string format(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace rghw
