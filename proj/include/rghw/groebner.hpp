#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "rghw/linalg.hpp"
#include "rghw/monideal.hpp"
#include "rghw/polyring.hpp"

namespace rghw {

/// Reduced, monic Groebner basis of the ideal generated by `generators`
/// with respect to the order of their ring, sorted by decreasing leading
/// monomial.  Zero generators are ignored; an all-zero input gives {}.
/// Pairs are selected by smallest lcm and skipped when the leading
/// monomials are coprime.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators);

/// Remainder of f on full division by `divisors`, whose leading
/// coefficients must be nonzero.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// h / f, throwing InvalidArgument when f does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& f);

/// An ideal of S with a lazily computed reduced Groebner basis.  Copies
/// share the cache; the basis is computed at most once even when queried
/// from several threads.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const;

  /// All generators homogeneous.
  bool is_graded() const noexcept;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  /// in(I), generated by the leading monomials of the basis.
  MonomialIdeal initial_ideal() const;
  /// Degree-d standard monomials in decreasing order.
  std::vector<Monomial> footprint_degree_slice(std::uint64_t d) const;
  /// H_I(d) = |footprint_degree_slice(d)|.  Throws for non-graded ideals.
  std::uint64_t hilbert_function(std::uint64_t d) const;
  /// Dimension, degree and regularity index of S/I.
  GradedQuotientSummary degree_of_quotient() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
std::uint64_t hilbert_function(const Ideal& ideal, std::uint64_t d);
std::vector<Monomial> footprint_degree_slice(const Ideal& ideal, std::uint64_t d);
GradedQuotientSummary degree_of_quotient(const Ideal& ideal);

/// Mutual generator membership.
bool ideals_equal(const Ideal& a, const Ideal& b);

/// I + (extra).
Ideal ideal_sum(const Ideal& ideal, std::span<const Polynomial> extra);

/// I intersect J, by eliminating w from w*I + (1 - w)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// (I : (f1, ..., fr)) as the intersection of the (I : fi), each obtained by
/// dividing the generators of I intersect (fi) by fi.
Ideal ideal_quotient(const Ideal& ideal, std::span<const Polynomial> fs);

/// Degree-d polynomials rewritten as an echelon family of standard
/// polynomials: normal forms, then Gaussian elimination on their
/// coordinates over the degree-d footprint.
struct StandardEchelon {
  /// Footprint monomials indexing the coordinate columns.
  std::vector<Monomial> columns;
  /// Echelon rows, nonzero only; rank = rows().
  linalg::Matrix coordinates;
  std::vector<Polynomial> polynomials;
  /// Pivot of each row, i.e. its leading monomial.
  std::vector<Monomial> leading;
  /// When the input is dependent modulo I: coefficients a with
  /// sum a_i * input_i in I, not all zero.
  std::optional<std::vector<Residue>> dependency;
};

StandardEchelon standard_echelon(const Ideal& ideal, std::uint64_t d,
                                 std::span<const Polynomial> polys);

}  // namespace rghw
