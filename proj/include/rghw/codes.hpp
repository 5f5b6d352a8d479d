#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rghw/error.hpp"
#include "rghw/groebner.hpp"
#include "rghw/linalg.hpp"
#include "rghw/points.hpp"

namespace rghw {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// C_X(d): the image of S_d under evaluation at the points of X.
struct EvaluationCode {
  ProjectivePointSet points;
  std::uint64_t degree;
  Ideal vanishing;
  /// Degree-d standard monomials of the vanishing ideal, decreasing.
  std::vector<Monomial> basis;
  /// k x n; row i evaluates basis[i].
  linalg::Matrix generator;

  std::size_t length() const noexcept { return points.size(); }
  std::size_t dimension() const noexcept { return generator.rows(); }
  const PrimeField& field() const noexcept { return points.field(); }
};

EvaluationCode build_code(const ProjectivePointSet& x, std::uint64_t d);
/// Reuses a vanishing ideal computed earlier for the same X.
EvaluationCode build_code(const ProjectivePointSet& x, const Ideal& vanishing, std::uint64_t d);

/// Row-space basis of the full degree-d monomial evaluation matrix.  Spans
/// the same code as build_code without using any Groebner basis.
linalg::Matrix code_basis_from_evaluations(const ProjectivePointSet& x, std::uint64_t d);

/// Raised by validate_subcode when Lambda_g1, ..., Lambda_gk1 are dependent.
class DependentGenerators : public InvalidArgument {
 public:
  DependentGenerators(const std::string& what, std::vector<Residue> witness)
      : InvalidArgument(what), witness_(std::move(witness)) {}
  /// Coefficients a, not all zero, with sum a_i * Lambda_gi = 0.
  const std::vector<Residue>& witness() const noexcept { return witness_; }

 private:
  std::vector<Residue> witness_;
};

/// C_X(d, k1, G).
struct SubcodeSpec {
  std::vector<Polynomial> generators;
  /// Echelon standard representatives; leading monomials are distinct.
  StandardEchelon normalized;
  /// k1 x n; row i is Lambda of generators[i].
  linalg::Matrix codewords;

  std::size_t k1() const noexcept { return generators.size(); }
};

/// Checks that G consists of degree-d forms with independent evaluations.
SubcodeSpec validate_subcode(const EvaluationCode& code, std::span<const Polynomial> g);

/// Number of coordinates at which some row is nonzero.  Throws
/// InvalidArgument when the rows are dependent.
std::size_t subspace_support(const linalg::Matrix& basis_rows, const PrimeField& field);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct BruteForceResult {
  std::size_t value = 0;
  /// Subspaces of C examined.
  std::uint64_t enumerated = 0;
  /// Subspaces meeting C1 trivially.
  std::uint64_t feasible = 0;
  /// r x n basis of a minimizing D.
  linalg::Matrix witness;
};

/// M_r(C, C1) by enumerating every r-dimensional subspace of C once.
/// Throws InvalidArgument unless 1 <= r <= k - k1, BudgetExceeded when the
/// number of subspaces exceeds the budget.
BruteForceResult rghw_bruteforce(const EvaluationCode& code, const SubcodeSpec& sub,
                                 std::size_t r, const EnumerationOptions& options = {});

/// n - k + r.
std::size_t singleton_bound(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r);

/// Throws InvalidArgument unless 1 <= r <= k - k1.
void require_rank_in_range(std::size_t r, std::size_t k, std::size_t k1);

}  // namespace rghw
