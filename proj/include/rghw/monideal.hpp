#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rghw/polyring.hpp"

namespace rghw {

/// Hilbert data of a graded quotient S/J with Krull dimension at most one.
struct GradedQuotientSummary {
  /// H(0), H(1), ... up to the degree at which stability was certified.
  std::vector<std::uint64_t> hilbert_values;
  /// Krull dimension of S/J: 0 or 1 (-1 for the zero ring S/S).
  int dimension = 0;
  /// deg(S/J): dim_K S/J in dimension 0, the stable Hilbert value in
  /// dimension 1.
  std::uint64_t degree = 0;
  /// Dimension 1 only: least d with H(e) = degree for every e >= d.
  std::optional<std::uint64_t> reg_index;
};

/// A monomial ideal held by its minimal generators.  The generator list is
/// an antichain under divisibility, sorted by degree and then decreasing
/// lex, so equal ideals have identical lists.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars);
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool contains(const Monomial& m) const noexcept;
  bool contains(const MonomialIdeal& other) const noexcept;

  /// (J : m), generated by u / gcd(u, m).
  MonomialIdeal quotient(const Monomial& m) const;
  /// (J : (M)) = intersection of (J : m) over m in M.  Throws on empty M.
  MonomialIdeal quotient(std::span<const Monomial> ms) const;
  /// Pairwise lcm of generators, re-minimalized.
  MonomialIdeal intersection(const MonomialIdeal& other) const;
  /// (J, extra).
  MonomialIdeal sum(std::span<const Monomial> extra) const;

  /// A monomial u outside J with u*m in J for every m in ms, i.e. a
  /// certificate that (J : (ms)) != J.  Searches the box bounded by the
  /// largest generator exponents, which contains every minimal generator
  /// of (J : (ms)).
  std::optional<Monomial> quotient_witness(std::span<const Monomial> ms) const;

  /// Exact Krull dimension of S/J: the largest variable set that supports
  /// no generator.  -1 for the unit ideal.
  int krull_dimension() const;
  /// Number of standard monomials of degree d.
  std::uint64_t hilbert_function(std::uint64_t d) const;
  /// Degree of the lcm of all minimal generators.  By the Taylor resolution
  /// the Hilbert function of S/J is polynomial from this degree on.
  std::uint64_t stabilization_bound() const noexcept;

  /// Full Hilbert summary.  Throws UnsupportedDimension for dim >= 2.
  GradedQuotientSummary summary() const;
  /// deg(S/J) only; skips the low-degree Hilbert values.
  std::uint64_t degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Removes duplicates and multiples, then sorts canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal quotient_by_monomial(const MonomialIdeal& j, const Monomial& m);
MonomialIdeal quotient_by_set(const MonomialIdeal& j, std::span<const Monomial> ms);
/// Mutual containment.
bool equals(const MonomialIdeal& j, const MonomialIdeal& l);
/// Hilbert summary of S/(J, extra).
GradedQuotientSummary monomial_quotient_degree(const MonomialIdeal& j,
                                               std::span<const Monomial> extra);

}  // namespace rghw
