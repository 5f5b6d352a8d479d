#include "rghw/codes.hpp"

#include <algorithm>
#include <limits>

namespace rghw {

EvaluationCode build_code(const ProjectivePointSet& x, std::uint64_t d) {
  return build_code(x, vanishing_ideal(x), d);
}

EvaluationCode build_code(const ProjectivePointSet& x, const Ideal& vanishing, std::uint64_t d) {
  if (d < 1) throw InvalidArgument("code degree must be at least 1");
  if (vanishing.ring()->nvars() != x.ambient() || !(vanishing.ring()->field() == x.field())) {
    throw ContextMismatch("vanishing ideal does not live over the point set's ring");
  }
  auto basis = vanishing.footprint_degree_slice(d);
  linalg::Matrix generator = evaluation_matrix(x, basis);
  return EvaluationCode{x, d, vanishing, std::move(basis), std::move(generator)};
}

linalg::Matrix code_basis_from_evaluations(const ProjectivePointSet& x, std::uint64_t d) {
  const PolynomialRing ring(x.field(), x.ambient());
  const auto monomials = ring.monomials_of_degree(d);
  return linalg::row_space_basis(evaluation_matrix(x, monomials), x.field());
}

void require_rank_in_range(std::size_t r, std::size_t k, std::size_t k1) {
  if (k1 > k) {
    throw InvalidArgument("k1 = " + std::to_string(k1) + " exceeds k = " + std::to_string(k));
  }
  if (r < 1 || r > k - k1) {
    throw InvalidArgument("r = " + std::to_string(r) + " outside [1, " + std::to_string(k - k1) +
                          "]");
  }
}

SubcodeSpec validate_subcode(const EvaluationCode& code, std::span<const Polynomial> g) {
  const RingPtr& ring = code.vanishing.ring();
  std::vector<Polynomial> gens;
  for (const auto& f : g) {
    if (f.ring()->nvars() != ring->nvars() || !(f.field() == ring->field())) {
      throw ContextMismatch("subcode generator " + format(f) + " lives in another ring");
    }
    if (f.is_zero() || !f.is_homogeneous(code.degree)) {
      throw InvalidArgument("subcode generator " + format(f) + " is not a form of degree " +
                            std::to_string(code.degree));
    }
    gens.push_back(f.in_ring(ring));
  }
  linalg::Matrix codewords = evaluation_matrix(code.points, gens);
  if (linalg::rank(codewords, code.field()) != gens.size()) {
    const linalg::Matrix deps = linalg::kernel(codewords.transposed(), code.field());
    const auto row = deps.row(0);
    std::vector<Residue> witness(row.begin(), row.end());
    std::string text;
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (witness[i] == 0) continue;
      if (!text.empty()) text += " + ";
      text += std::to_string(witness[i]) + "*(" + format(gens[i]) + ")";
    }
    throw DependentGenerators("subcode generators are dependent: " + text + " vanishes on X",
                              std::move(witness));
  }
  StandardEchelon normalized = standard_echelon(code.vanishing, code.degree, gens);
  return SubcodeSpec{std::move(gens), std::move(normalized), std::move(codewords)};
}

std::size_t subspace_support(const linalg::Matrix& basis_rows, const PrimeField& field) {
  if (linalg::rank(basis_rows, field) != basis_rows.rows()) {
    throw InvalidArgument("subspace basis rows are dependent");
  }
  std::size_t support = 0;
  for (std::size_t c = 0; c < basis_rows.cols(); ++c) {
    for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
      if (basis_rows(r, c) != 0) {
        ++support;
        break;
      }
    }
  }
  return support;
}

namespace {

struct PatternBest {
  std::size_t value = std::numeric_limits<std::size_t>::max();
  std::uint64_t enumerated = 0;
  std::uint64_t feasible = 0;
  linalg::Matrix witness;
};

}  // namespace

BruteForceResult rghw_bruteforce(const EvaluationCode& code, const SubcodeSpec& sub,
                                 std::size_t r, const EnumerationOptions& options) {
  const std::size_t k = code.dimension();
  const std::size_t k1 = sub.k1();
  require_rank_in_range(r, k, k1);
  const auto& field = code.field();
  const std::uint64_t total = linalg::gaussian_binomial(k, r, field.modulus());
  if (total > options.budget) {
    throw BudgetExceeded("subspace enumeration", total, options.budget);
  }
  const std::size_t n = code.length();
  const linalg::EchelonSubspaces subspaces(k, r, field);
  std::vector<PatternBest> best(subspaces.patterns().size());
  linalg::parallel_for(best.size(), options.threads, [&](std::size_t p) {
    PatternBest& out = best[p];
    subspaces.for_each_in_pattern(p, [&](const linalg::Matrix& coeffs) {
      ++out.enumerated;
      const linalg::Matrix d = linalg::multiply(coeffs, code.generator, field);
      if (k1 > 0 && linalg::rank(d.stacked(sub.codewords), field) != r + k1) return;
      ++out.feasible;
      std::size_t support = 0;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < r; ++i) {
          if (d(i, c) != 0) {
            ++support;
            break;
          }
        }
      }
      if (support < out.value) {
        out.value = support;
        out.witness = d;
      }
    });
  });
  BruteForceResult result;
  result.value = std::numeric_limits<std::size_t>::max();
  for (auto& b : best) {
    result.enumerated += b.enumerated;
    result.feasible += b.feasible;
    if (b.value < result.value) {
      result.value = b.value;
      result.witness = std::move(b.witness);
    }
  }
  return result;
}

std::size_t singleton_bound(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r) {
  require_rank_in_range(r, code.dimension(), sub.k1());
  return code.length() - code.dimension() + r;
}

}  // namespace rghw
