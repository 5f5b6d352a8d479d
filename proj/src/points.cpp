#include "rghw/points.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rghw/error.hpp"

namespace rghw {

ProjectivePoint ProjectivePoint::normalize(std::span<const std::int64_t> raw,
                                           const PrimeField& field) {
  std::vector<Residue> coords;
  coords.reserve(raw.size());
  for (auto v : raw) coords.push_back(field.reduce(v));
  const auto first = std::find_if(coords.begin(), coords.end(), [](Residue v) { return v != 0; });
  if (first == coords.end()) throw InvalidArgument("the zero vector is not a projective point");
  const Residue scale = field.inv(*first);
  for (auto& v : coords) v = field.mul(v, scale);
  return ProjectivePoint(std::move(coords));
}

ProjectivePoint normalize(std::span<const std::int64_t> raw, const PrimeField& field) {
  return ProjectivePoint::normalize(raw, field);
}

std::string ProjectivePoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ':';
    out += std::to_string(coords_[i]);
  }
  return out;
}

ProjectivePointSet::ProjectivePointSet(PrimeField field, std::size_t ambient,
                                       std::vector<ProjectivePoint> points)
    : field_(field), ambient_(ambient), points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("empty point set");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != ambient_) {
      throw InvalidArgument("point " + points_[i].to_string() + " does not have " +
                            std::to_string(ambient_) + " coordinates");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw InvalidArgument("duplicate point " + points_[i].to_string());
      }
    }
  }
}

ProjectivePointSet ProjectivePointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<ProjectivePoint> pts;
  for (auto i : indices) pts.push_back(points_.at(i));
  return ProjectivePointSet(field_, ambient_, std::move(pts));
}

namespace {

// Calls visit for every vector in values^len, last coordinate fastest.
template <class Visit>
void for_each_tuple(const std::vector<std::vector<std::int64_t>>& values, Visit&& visit) {
  std::vector<std::size_t> idx(values.size(), 0);
  std::vector<std::int64_t> cur(values.size());
  while (true) {
    for (std::size_t i = 0; i < values.size(); ++i) cur[i] = values[i][idx[i]];
    visit(cur);
    std::size_t k = values.size();
    while (k > 0) {
      if (++idx[k - 1] < values[k - 1].size()) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

}  // namespace

ProjectivePointSet projective_torus(std::uint32_t q, std::size_t s) {
  if (s < 2) throw InvalidArgument("projective torus needs at least two coordinates");
  const PrimeField field(q);
  std::vector<std::int64_t> units;
  for (std::uint32_t z = 1; z < q; ++z) units.push_back(z);
  std::vector<std::vector<std::int64_t>> factors(s - 1, units);
  std::vector<ProjectivePoint> pts;
  for_each_tuple(factors, [&](const std::vector<std::int64_t>& tail) {
    std::vector<std::int64_t> raw{1};
    raw.insert(raw.end(), tail.begin(), tail.end());
    pts.push_back(ProjectivePoint::normalize(raw, field));
  });
  return ProjectivePointSet(field, s, std::move(pts));
}

ProjectivePointSet affine_cartesian(const PrimeField& field,
                                    const std::vector<std::vector<std::int64_t>>& factors) {
  if (factors.empty()) throw InvalidArgument("affine cartesian product needs a factor");
  for (const auto& a : factors) {
    if (a.empty()) throw InvalidArgument("empty factor in affine cartesian product");
  }
  std::vector<ProjectivePoint> pts;
  for_each_tuple(factors, [&](const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> raw = x;
    raw.push_back(1);
    pts.push_back(ProjectivePoint::normalize(raw, field));
  });
  return ProjectivePointSet(field, factors.size() + 1, std::move(pts));
}

ProjectivePointSet projective_space(std::uint32_t q, std::size_t s) {
  if (s < 1) throw InvalidArgument("projective space needs a coordinate");
  const PrimeField field(q);
  std::vector<std::int64_t> all;
  for (std::uint32_t z = 0; z < q; ++z) all.push_back(z);
  std::vector<ProjectivePoint> pts;
  for (std::size_t lead = 0; lead < s; ++lead) {
    std::vector<std::vector<std::int64_t>> factors(s - lead - 1, all);
    auto emit = [&](const std::vector<std::int64_t>& tail) {
      std::vector<std::int64_t> raw(lead, 0);
      raw.push_back(1);
      raw.insert(raw.end(), tail.begin(), tail.end());
      pts.push_back(ProjectivePoint::normalize(raw, field));
    };
    if (factors.empty()) {
      emit({});
    } else {
      for_each_tuple(factors, emit);
    }
  }
  return ProjectivePointSet(field, s, std::move(pts));
}

ProjectivePointSet parse_point_list(std::string_view text, const PrimeField& field) {
  std::vector<ProjectivePoint> pts;
  std::size_t ambient = 0;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    ++line_no;
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::int64_t> raw;
    std::size_t pos = 0;
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    while (!blank) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::int64_t v = 0;
      const char* begin = line.data() + pos;
      const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), v);
      if (ec != std::errc()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer coordinate",
                         line_start + pos);
      }
      raw.push_back(v);
      pos = static_cast<std::size_t>(ptr - line.data());
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos == line.size()) break;
      if (line[pos] != ':') {
        throw ParseError("line " + std::to_string(line_no) + ": expected ':'", line_start + pos);
      }
      ++pos;
    }
    if (!blank) {
      if (ambient == 0) ambient = raw.size();
      if (raw.size() != ambient) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(ambient) + " coordinates",
                         line_start);
      }
      try {
        pts.push_back(ProjectivePoint::normalize(raw, field));
      } catch (const InvalidArgument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_start);
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (pts.empty()) throw ParseError("point list is empty", 0);
  return ProjectivePointSet(field, ambient, std::move(pts));
}

linalg::Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Monomial> basis) {
  const auto& field = x.field();
  const std::size_t s = x.ambient();
  std::uint32_t max_exp = 0;
  for (const auto& m : basis) {
    if (m.size() != s) throw ContextMismatch("monomial variable count differs from ambient");
    for (auto e : m.exponents()) max_exp = std::max(max_exp, e);
  }
  // powers[p][i][e] = P_p[i]^e
  std::vector<std::vector<std::vector<Residue>>> powers(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    powers[p].assign(s, std::vector<Residue>(max_exp + 1, 1 % field.modulus()));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::uint32_t e = 1; e <= max_exp; ++e) {
        powers[p][i][e] = field.mul(powers[p][i][e - 1], x[p][i]);
      }
    }
  }
  linalg::Matrix out(basis.size(), x.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      Residue v = 1 % field.modulus();
      for (std::size_t i = 0; i < s; ++i) v = field.mul(v, powers[p][i][basis[b][i]]);
      out(b, p) = v;
    }
  }
  return out;
}

linalg::Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Polynomial> basis) {
  std::optional<std::uint64_t> degree;
  for (const auto& f : basis) {
    if (f.ring()->nvars() != x.ambient()) {
      throw ContextMismatch("polynomial variable count differs from ambient");
    }
    if (!f.is_homogeneous()) {
      throw InvalidArgument("evaluation of inhomogeneous polynomial " + format(f));
    }
    if (const auto d = f.total_degree()) {
      if (degree && *degree != *d) throw InvalidArgument("evaluation basis mixes degrees");
      degree = d;
    }
  }
  linalg::Matrix out(basis.size(), x.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t p = 0; p < x.size(); ++p) out(b, p) = basis[b].evaluate(x[p].coordinates());
  }
  return out;
}

Ideal vanishing_ideal(const ProjectivePointSet& x, MonomialOrder order) {
  const RingPtr ring =
      std::make_shared<const PolynomialRing>(x.field(), x.ambient(), order);
  const auto& field = x.field();
  std::vector<Polynomial> basis;
  std::optional<std::uint64_t> full_rank_degree;
  for (std::uint64_t d = 1;; ++d) {
    const auto monomials = ring->monomials_of_degree(d);
    const linalg::Matrix eval = evaluation_matrix(x, monomials);
    const std::size_t rank_d = linalg::rank(eval, field);
    Ideal current(ring, basis);
    if (current.hilbert_function(d) > rank_d) {
      const linalg::Matrix kernel = linalg::kernel(eval.transposed(), field);
      for (std::size_t k = 0; k < kernel.rows(); ++k) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < monomials.size(); ++j) {
          if (kernel(k, j) != 0) terms.push_back({monomials[j], kernel(k, j)});
        }
        const Polynomial p = Polynomial::from_terms(ring, std::move(terms));
        if (current.contains(p)) continue;
        std::vector<Polynomial> gens = current.groebner_basis();
        gens.push_back(p);
        basis = buchberger(gens);
        current = Ideal(ring, basis);
        if (current.hilbert_function(d) == rank_d) break;
      }
    }
    if (!full_rank_degree && rank_d == x.size()) full_rank_degree = d;
    if (full_rank_degree && d == *full_rank_degree + 1) break;
  }
  return Ideal(ring, std::move(basis));
}

Ideal point_ideal(const ProjectivePoint& p, const RingPtr& ring) {
  const auto& field = ring->field();
  std::size_t lead = 0;
  while (p[lead] == 0) ++lead;
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == lead) continue;
    gens.push_back(Polynomial::variable(ring, j) -
                   Polynomial::variable(ring, lead).scaled(p[j] % field.modulus()));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<std::size_t> zero_set(const ProjectivePointSet& x, std::span<const Polynomial> fs) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    const bool vanishes = std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) {
      return f.evaluate(x[p].coordinates()) == 0;
    });
    if (vanishes) out.push_back(p);
  }
  return out;
}

}  // namespace rghw
