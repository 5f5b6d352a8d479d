#include "rghw/monideal.hpp"

#include <algorithm>
#include <string>

#include "rghw/error.hpp"

namespace rghw {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
  });
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    // Sorted by degree, so only earlier entries can divide g.
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw ContextMismatch("monomial ideal generator size mismatch");
  }
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const noexcept {
  return !gens_.empty() && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.quotient(gcd(g, m)));
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::quotient(std::span<const Monomial> ms) const {
  if (ms.empty()) throw InvalidArgument("ideal quotient by an empty monomial set");
  MonomialIdeal acc = quotient(ms.front());
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc.intersection(quotient(ms[i]));
  return acc;
}

MonomialIdeal MonomialIdeal::intersection(const MonomialIdeal& other) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) out.push_back(lcm(a, b));
  }
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::sum(std::span<const Monomial> extra) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), extra.begin(), extra.end());
  return MonomialIdeal(nvars_, std::move(all));
}

std::optional<Monomial> MonomialIdeal::quotient_witness(std::span<const Monomial> ms) const {
  if (ms.empty()) throw InvalidArgument("ideal quotient by an empty monomial set");
  Monomial bound(nvars_);
  for (const auto& g : gens_) bound = lcm(bound, g);
  Monomial u(nvars_);
  while (true) {
    if (!contains(u) &&
        std::all_of(ms.begin(), ms.end(), [&](const Monomial& m) { return contains(u * m); })) {
      return u;
    }
    std::size_t i = 0;
    for (; i < nvars_; ++i) {
      if (u[i] < bound[i]) {
        u.set(i, u[i] + 1);
        break;
      }
      u.set(i, 0);
    }
    if (i == nvars_) return std::nullopt;
  }
}

int MonomialIdeal::krull_dimension() const {
  if (is_unit()) return -1;
  // Support masks of the generators; a variable set V is independent when
  // no generator is supported inside V.
  std::vector<unsigned> supports;
  supports.reserve(gens_.size());
  for (const auto& g : gens_) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (g[i] != 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned v = 0; v < (1u << nvars_); ++v) {
    const int size = __builtin_popcount(v);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [v](unsigned s) { return (s & ~v) == 0; });
    if (independent) best = size;
  }
  return best;
}

namespace {

// Counts degree-d monomials outside J.  A partial assignment that already
// lies in J prunes its whole subtree, since completions are multiples.
std::uint64_t count_standard(const MonomialIdeal& j, std::size_t var, std::uint64_t remaining,
                             Monomial& cur) {
  const std::size_t n = cur.size();
  if (var + 1 == n) {
    cur.set(var, static_cast<std::uint32_t>(remaining));
    const bool standard = !j.contains(cur);
    cur.set(var, 0);
    return standard ? 1 : 0;
  }
  std::uint64_t total = 0;
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    cur.set(var, static_cast<std::uint32_t>(e));
    if (j.contains(cur)) break;  // larger e are multiples as well
    total += count_standard(j, var + 1, remaining - e, cur);
  }
  cur.set(var, 0);
  return total;
}

}  // namespace

std::uint64_t MonomialIdeal::hilbert_function(std::uint64_t d) const {
  Monomial cur(nvars_);
  return count_standard(*this, 0, d, cur);
}

std::uint64_t MonomialIdeal::stabilization_bound() const noexcept {
  Monomial l(nvars_);
  for (const auto& g : gens_) l = lcm(l, g);
  return l.degree();
}

namespace {

void require_low_dimension(int dim) {
  if (dim >= 2) {
    throw UnsupportedDimension("quotient ring has Krull dimension " + std::to_string(dim) +
                               "; only dimensions 0 and 1 are supported");
  }
}

}  // namespace

GradedQuotientSummary MonomialIdeal::summary() const {
  GradedQuotientSummary out;
  const int dim = krull_dimension();
  require_low_dimension(dim);
  out.dimension = dim;
  if (dim < 0) {
    out.hilbert_values = {0};
    return out;
  }
  if (dim == 0) {
    for (std::uint64_t d = 0;; ++d) {
      const auto h = hilbert_function(d);
      out.hilbert_values.push_back(h);
      if (h == 0) break;
      out.degree += h;
    }
    return out;
  }
  const std::uint64_t bound = stabilization_bound();
  for (std::uint64_t d = 0; d <= bound + 1; ++d) out.hilbert_values.push_back(hilbert_function(d));
  const auto stable = out.hilbert_values[bound];
  if (out.hilbert_values[bound + 1] != stable) {
    throw UnsupportedDimension("Hilbert function did not stabilize by degree " +
                               std::to_string(bound + 1));
  }
  out.degree = stable;
  std::uint64_t reg = bound;
  while (reg > 0 && out.hilbert_values[reg - 1] == stable) --reg;
  out.reg_index = reg;
  return out;
}

std::uint64_t MonomialIdeal::degree() const {
  const int dim = krull_dimension();
  require_low_dimension(dim);
  if (dim <= 0) return summary().degree;
  const std::uint64_t bound = stabilization_bound();
  const auto stable = hilbert_function(bound);
  if (hilbert_function(bound + 1) != stable) {
    throw UnsupportedDimension("Hilbert function did not stabilize by degree " +
                               std::to_string(bound + 1));
  }
  return stable;
}

MonomialIdeal quotient_by_monomial(const MonomialIdeal& j, const Monomial& m) {
  return j.quotient(m);
}

MonomialIdeal quotient_by_set(const MonomialIdeal& j, std::span<const Monomial> ms) {
  return j.quotient(ms);
}

bool equals(const MonomialIdeal& j, const MonomialIdeal& l) {
  if (j.nvars() != l.nvars()) throw ContextMismatch("monomial ideals in different rings");
  return j.contains(l) && l.contains(j);
}

GradedQuotientSummary monomial_quotient_degree(const MonomialIdeal& j,
                                               std::span<const Monomial> extra) {
  return j.sum(extra).summary();
}

}  // namespace rghw
