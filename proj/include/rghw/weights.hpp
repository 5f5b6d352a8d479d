#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/groebner.hpp"
#include "rghw/monideal.hpp"
#include "rghw/points.hpp"

namespace rghw {

/// How deg(S/(I,F)) and deg(S/(I:(F))) are obtained for a candidate F.
enum class DegreeMethod {
  /// |V_X(F)| and |X \ V_X(F)| read off the evaluations.
  evaluation,
  /// Groebner bases of (I, F) and (I : (F)); slow, for cross-checks.
  groebner,
};

struct WeightOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  DegreeMethod method = DegreeMethod::evaluation;
  /// Footprint only: drop in(g1), ..., in(gk1) from the monomial pool.
  /// Off by default; with it on the footprint can exceed M_r.
  bool exclude_subcode_leads = false;
};

/// (d, r, G) with k1 = |G|.
struct WeightQuery {
  std::uint64_t degree = 1;
  std::size_t rank = 1;
  std::vector<Polynomial> subcode;
};

struct WeightResult {
  std::int64_t value = 0;
  /// Sets examined, admissible or not.
  std::uint64_t enumerated = 0;
  /// Admissible sets: the size of F_{d,r,k1,G} restricted to echelon
  /// standard bases, or of the monomial family for the footprint.
  std::uint64_t candidates = 0;
  /// No admissible set; value is deg(S/I).
  bool empty_branch = false;
  /// An optimal F (standard, monic, echelon) for delta and vartheta.
  std::vector<Polynomial> witness;
  /// An optimal M for the footprint function.
  std::vector<Monomial> witness_monomials;
};

struct RelativeWeights {
  WeightResult delta;
  WeightResult vasconcelos;
};

/// delta_I and vartheta_I from one scan over the r-dimensional subspaces W
/// of the span of the degree-d standard monomials with W meeting <G>
/// trivially modulo I.  Throws InvalidArgument unless 1 <= r <= k - k1 and
/// BudgetExceeded when the subspace count exceeds the budget.
RelativeWeights relative_weights(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                                 const WeightOptions& options = {});

WeightResult rgmdf(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                   const WeightOptions& options = {});
WeightResult vasconcelos(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                         const WeightOptions& options = {});

/// delta_I maximized over every r-dimensional subspace of S_d rather than
/// only standard ones.  Exponentially slower; used to test the restriction.
WeightResult rgmdf_unrestricted(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                                const WeightOptions& options = {});

/// fp_I(d, r, k1, G) for any graded ideal whose quotients by the candidate
/// monomial sets have dimension at most one.  M runs over r-subsets of the
/// degree-d footprint; G fixes k1 and must be independent modulo I.
WeightResult rgff(const Ideal& ideal, std::uint64_t d, std::size_t r, std::span<const Polynomial> g,
                  const WeightOptions& options = {});
WeightResult rgff(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                  const WeightOptions& options = {});

/// Query front-ends: build C_X(d), validate G and run the function.
WeightResult rgmdf(const ProjectivePointSet& x, const Ideal& vanishing, const WeightQuery& query,
                   const WeightOptions& options = {});
WeightResult vasconcelos(const ProjectivePointSet& x, const Ideal& vanishing,
                         const WeightQuery& query, const WeightOptions& options = {});
WeightResult rgff(const Ideal& ideal, const WeightQuery& query, const WeightOptions& options = {});

struct PointWitness {
  bool admissible = false;
  std::optional<ProjectivePoint> point;
};

struct MonomialWitness {
  bool admissible = false;
  std::optional<Monomial> monomial;
};

/// (I_X : (F)) != I_X, i.e. F has a common zero on X.
PointWitness candidate_membership_check(const ProjectivePointSet& x, std::span<const Polynomial> f);
/// (J : (M)) != J, with a monomial outside J that M multiplies into J.
MonomialWitness candidate_membership_check(const MonomialIdeal& j, std::span<const Monomial> m);

/// deg(S/(I, F)) through a Groebner basis.
std::uint64_t degree_of_sum(const Ideal& ideal, std::span<const Polynomial> f);
/// deg(S/(I : (F))) through a Groebner basis.
std::uint64_t degree_of_colon(const Ideal& ideal, std::span<const Polynomial> f);

}  // namespace rghw
