#include "rghw/weights.hpp"

#include <algorithm>
#include <limits>

namespace rghw {

namespace {

Polynomial combination(const RingPtr& ring, std::span<const Residue> coeffs,
                       const std::vector<Monomial>& basis) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] != 0) terms.push_back({basis[j], coeffs[j]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> combinations(const RingPtr& ring, const linalg::Matrix& coeffs,
                                     const std::vector<Monomial>& basis) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < coeffs.rows(); ++i) out.push_back(combination(ring, coeffs.row(i), basis));
  return out;
}

// Columns at which every row of d vanishes.
std::size_t common_zeros(const linalg::Matrix& d) {
  std::size_t zeros = 0;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    bool all_zero = true;
    for (std::size_t i = 0; i < d.rows() && all_zero; ++i) all_zero = d(i, c) == 0;
    if (all_zero) ++zeros;
  }
  return zeros;
}

// True when the rows of a stay independent after clearing the pivot
// columns of the echelon rows g.
bool independent_modulo(linalg::Matrix a, const linalg::Matrix& g,
                        const std::vector<std::size_t>& g_pivots, const PrimeField& field) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < g.rows(); ++j) {
      const Residue c = a(i, g_pivots[j]);
      if (c == 0) continue;
      const Residue neg = field.neg(c);
      for (std::size_t col = 0; col < a.cols(); ++col) {
        a(i, col) = field.add(a(i, col), field.mul(neg, g(j, col)));
      }
    }
  }
  return linalg::rank(std::move(a), field) == a.rows();
}

std::vector<std::size_t> pivots_of(const linalg::Matrix& echelon) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t c = 0;
    while (echelon(i, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

struct ScanBest {
  // Largest degree drop, i.e. deg(S/(I,F)), seen so far.
  std::int64_t sum_degree = -1;
  std::int64_t colon_degree = std::numeric_limits<std::int64_t>::max();
  std::uint64_t enumerated = 0;
  std::uint64_t candidates = 0;
  linalg::Matrix sum_witness;
  linalg::Matrix colon_witness;
};

struct SubspaceScan {
  std::size_t dimension;
  const std::vector<Monomial>* basis;
  const linalg::Matrix* evaluations;
  // Returns false when the coefficient rows meet <G> modulo I.
  std::function<bool(const linalg::Matrix& coeffs, const linalg::Matrix& d)> independent;
};

RelativeWeights run_scan(const EvaluationCode& code, std::size_t r, const SubspaceScan& scan,
                         const WeightOptions& options) {
  const auto& field = code.field();
  const std::uint64_t total = linalg::gaussian_binomial(scan.dimension, r, field.modulus());
  if (total > options.budget) throw BudgetExceeded("subspace enumeration", total, options.budget);
  const Ideal& ideal = code.vanishing;
  const RingPtr& ring = ideal.ring();
  const std::int64_t n = static_cast<std::int64_t>(code.length());

  const linalg::EchelonSubspaces subspaces(scan.dimension, r, field);
  std::vector<ScanBest> best(subspaces.patterns().size());
  linalg::parallel_for(best.size(), options.threads, [&](std::size_t p) {
    ScanBest& out = best[p];
    subspaces.for_each_in_pattern(p, [&](const linalg::Matrix& coeffs) {
      ++out.enumerated;
      const linalg::Matrix d = linalg::multiply(coeffs, *scan.evaluations, field);
      if (!scan.independent(coeffs, d)) return;
      std::int64_t sum_degree = 0;
      std::int64_t colon_degree = 0;
      if (options.method == DegreeMethod::evaluation) {
        const auto zeros = static_cast<std::int64_t>(common_zeros(d));
        if (zeros == 0) return;
        sum_degree = zeros;
        colon_degree = n - zeros;
      } else {
        const auto f = combinations(ring, coeffs, *scan.basis);
        const Ideal colon = ideal_quotient(ideal, f);
        if (ideals_equal(colon, ideal)) return;
        sum_degree = static_cast<std::int64_t>(degree_of_sum(ideal, f));
        colon_degree = static_cast<std::int64_t>(colon.degree_of_quotient().degree);
      }
      ++out.candidates;
      if (sum_degree > out.sum_degree) {
        out.sum_degree = sum_degree;
        out.sum_witness = coeffs;
      }
      if (colon_degree < out.colon_degree) {
        out.colon_degree = colon_degree;
        out.colon_witness = coeffs;
      }
    });
  });

  std::int64_t base = n;
  if (options.method == DegreeMethod::groebner) {
    base = static_cast<std::int64_t>(ideal.degree_of_quotient().degree);
  }
  RelativeWeights out;
  ScanBest total_best;
  for (auto& b : best) {
    total_best.enumerated += b.enumerated;
    total_best.candidates += b.candidates;
    if (b.sum_degree > total_best.sum_degree) {
      total_best.sum_degree = b.sum_degree;
      total_best.sum_witness = std::move(b.sum_witness);
    }
    if (b.colon_degree < total_best.colon_degree) {
      total_best.colon_degree = b.colon_degree;
      total_best.colon_witness = std::move(b.colon_witness);
    }
  }
  for (WeightResult* w : {&out.delta, &out.vasconcelos}) {
    w->enumerated = total_best.enumerated;
    w->candidates = total_best.candidates;
    w->empty_branch = total_best.candidates == 0;
  }
  if (total_best.candidates == 0) {
    out.delta.value = base;
    out.vasconcelos.value = base;
    return out;
  }
  out.delta.value = base - total_best.sum_degree;
  out.delta.witness = combinations(ring, total_best.sum_witness, *scan.basis);
  out.vasconcelos.value = total_best.colon_degree;
  out.vasconcelos.witness = combinations(ring, total_best.colon_witness, *scan.basis);
  return out;
}

void require_matching_subcode(const EvaluationCode& code, const SubcodeSpec& sub) {
  if (sub.normalized.columns != code.basis || sub.codewords.cols() != code.length()) {
    throw ContextMismatch("subcode was validated against a different code");
  }
}

}  // namespace

RelativeWeights relative_weights(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                                 const WeightOptions& options) {
  require_matching_subcode(code, sub);
  require_rank_in_range(r, code.dimension(), sub.k1());
  const auto& field = code.field();
  const linalg::Matrix& g = sub.normalized.coordinates;
  const auto g_pivots = pivots_of(g);
  SubspaceScan scan{code.dimension(), &code.basis, &code.generator,
                    [&](const linalg::Matrix& coeffs, const linalg::Matrix&) {
                      return g.rows() == 0 || independent_modulo(coeffs, g, g_pivots, field);
                    }};
  return run_scan(code, r, scan, options);
}

WeightResult rgmdf(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                   const WeightOptions& options) {
  return relative_weights(code, sub, r, options).delta;
}

WeightResult vasconcelos(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                         const WeightOptions& options) {
  return relative_weights(code, sub, r, options).vasconcelos;
}

WeightResult rgmdf_unrestricted(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                                const WeightOptions& options) {
  require_matching_subcode(code, sub);
  require_rank_in_range(r, code.dimension(), sub.k1());
  const auto& field = code.field();
  const auto monomials = code.vanishing.ring()->monomials_of_degree(code.degree);
  const linalg::Matrix evaluations = evaluation_matrix(code.points, monomials);
  const std::size_t k1 = sub.k1();
  SubspaceScan scan{monomials.size(), &monomials, &evaluations,
                    [&](const linalg::Matrix&, const linalg::Matrix& d) {
                      return linalg::rank(d.stacked(sub.codewords), field) == r + k1;
                    }};
  return run_scan(code, r, scan, options).delta;
}

namespace {

// Monomials u outside J inside the box bounded by the generator exponents.
// Every minimal generator of (J : (M)) lies in this box.
std::vector<Monomial> quotient_test_box(const MonomialIdeal& j, std::uint64_t limit) {
  Monomial bound(j.nvars());
  for (const auto& g : j.generators()) bound = lcm(bound, g);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < j.nvars(); ++i) {
    size *= bound[i] + 1ULL;
    if (size > limit) return {};
  }
  std::vector<Monomial> out;
  Monomial u(j.nvars());
  while (true) {
    if (!j.contains(u)) out.push_back(u);
    std::size_t i = 0;
    for (; i < j.nvars(); ++i) {
      if (u[i] < bound[i]) {
        u.set(i, u[i] + 1);
        break;
      }
      u.set(i, 0);
    }
    if (i == j.nvars()) return out;
  }
}

struct FootprintBest {
  std::int64_t degree = -1;
  std::uint64_t enumerated = 0;
  std::uint64_t candidates = 0;
  std::vector<std::size_t> witness;
};

constexpr std::uint64_t kBoxLimit = 1U << 20;

}  // namespace

WeightResult rgff(const Ideal& ideal, std::uint64_t d, std::size_t r, std::span<const Polynomial> g,
                  const WeightOptions& options) {
  if (d < 1) throw InvalidArgument("degree must be at least 1");
  const MonomialIdeal j = ideal.initial_ideal();
  const auto slice = ideal.footprint_degree_slice(d);
  std::vector<Monomial> excluded;
  if (!g.empty()) {
    const StandardEchelon se = standard_echelon(ideal, d, g);
    if (se.dependency) {
      throw DependentGenerators("subcode generators are dependent modulo the ideal",
                                *se.dependency);
    }
    if (options.exclude_subcode_leads) excluded = se.leading;
  }
  require_rank_in_range(r, slice.size(), g.size());
  std::vector<Monomial> pool;
  for (const auto& m : slice) {
    if (std::find(excluded.begin(), excluded.end(), m) == excluded.end()) pool.push_back(m);
  }
  const std::uint64_t total = linalg::binomial(pool.size(), r);
  if (total > options.budget) throw BudgetExceeded("monomial subset enumeration", total, options.budget);

  // mask[u] has bit i set when u * pool[i] lies in J.
  const auto box = pool.size() <= 64 ? quotient_test_box(j, kBoxLimit) : std::vector<Monomial>{};
  const bool use_masks = !box.empty();
  std::vector<std::uint64_t> masks;
  if (use_masks) {
    for (const auto& u : box) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (j.contains(u * pool[i])) mask |= std::uint64_t{1} << i;
      }
      masks.push_back(mask);
    }
  }
  const auto base = static_cast<std::int64_t>(j.degree());

  const std::size_t firsts = pool.size() - r + 1;
  std::vector<FootprintBest> best(firsts);
  linalg::parallel_for(firsts, options.threads, [&](std::size_t first) {
    FootprintBest& out = best[first];
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = first + i;
    std::vector<Monomial> m(r);
    while (true) {
      ++out.enumerated;
      for (std::size_t i = 0; i < r; ++i) m[i] = pool[idx[i]];
      bool admissible = false;
      if (use_masks) {
        std::uint64_t want = 0;
        for (auto i : idx) want |= std::uint64_t{1} << i;
        admissible = std::any_of(masks.begin(), masks.end(),
                                 [&](std::uint64_t mask) { return (mask & want) == want; });
      } else {
        admissible = j.quotient_witness(m).has_value();
      }
      if (admissible) {
        ++out.candidates;
        const auto degree = static_cast<std::int64_t>(j.sum(m).degree());
        if (degree > out.degree) {
          out.degree = degree;
          out.witness = idx;
        }
      }
      // Advance idx[1..r-1]; idx[0] stays fixed.
      std::size_t k = r;
      while (k > 1 && idx[k - 1] == pool.size() - r + k - 1) --k;
      if (k <= 1) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
  });

  WeightResult result;
  FootprintBest total_best;
  for (auto& b : best) {
    result.enumerated += b.enumerated;
    result.candidates += b.candidates;
    if (b.degree > total_best.degree) {
      total_best.degree = b.degree;
      total_best.witness = std::move(b.witness);
    }
  }
  result.empty_branch = result.candidates == 0;
  if (result.empty_branch) {
    result.value = base;
    return result;
  }
  result.value = base - total_best.degree;
  for (auto i : total_best.witness) result.witness_monomials.push_back(pool[i]);
  return result;
}

WeightResult rgff(const EvaluationCode& code, const SubcodeSpec& sub, std::size_t r,
                  const WeightOptions& options) {
  require_matching_subcode(code, sub);
  return rgff(code.vanishing, code.degree, r, sub.generators, options);
}

WeightResult rgmdf(const ProjectivePointSet& x, const Ideal& vanishing, const WeightQuery& query,
                   const WeightOptions& options) {
  const EvaluationCode code = build_code(x, vanishing, query.degree);
  return rgmdf(code, validate_subcode(code, query.subcode), query.rank, options);
}

WeightResult vasconcelos(const ProjectivePointSet& x, const Ideal& vanishing,
                         const WeightQuery& query, const WeightOptions& options) {
  const EvaluationCode code = build_code(x, vanishing, query.degree);
  return vasconcelos(code, validate_subcode(code, query.subcode), query.rank, options);
}

WeightResult rgff(const Ideal& ideal, const WeightQuery& query, const WeightOptions& options) {
  return rgff(ideal, query.degree, query.rank, query.subcode, options);
}

PointWitness candidate_membership_check(const ProjectivePointSet& x,
                                        std::span<const Polynomial> f) {
  const auto zeros = zero_set(x, f);
  if (zeros.empty()) return {};
  return {true, x[zeros.front()]};
}

MonomialWitness candidate_membership_check(const MonomialIdeal& j, std::span<const Monomial> m) {
  auto u = j.quotient_witness(m);
  if (!u) return {};
  return {true, *u};
}

std::uint64_t degree_of_sum(const Ideal& ideal, std::span<const Polynomial> f) {
  return ideal_sum(ideal, f).degree_of_quotient().degree;
}

std::uint64_t degree_of_colon(const Ideal& ideal, std::span<const Polynomial> f) {
  return ideal_quotient(ideal, f).degree_of_quotient().degree;
}

}  // namespace rghw
