#include "rghw/groebner.hpp"

#include <algorithm>
#include <string>

#include "rghw/error.hpp"

namespace rghw {

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  const auto& field = f.field();
  std::vector<Term> remainder;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lead = rest.terms().front();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      rest = rest.tail();
      continue;
    }
    const Residue c =
        field.mul(lead.coefficient, field.inv(divisor->terms().front().coefficient));
    rest = axpy(rest, c, lead.monomial.quotient(divisor->leading_monomial()), *divisor);
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  const auto& field = f.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a =
      f.mul_term(l.quotient(f.leading_monomial()), field.inv(f.terms().front().coefficient));
  return axpy(a, field.inv(g.terms().front().coefficient), l.quotient(g.leading_monomial()), g);
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& f) {
  require_same_ring(*h.ring(), *f.ring());
  if (f.is_zero()) throw DivisionByZero();
  const auto& field = h.field();
  const Residue inv_lead = field.inv(f.terms().front().coefficient);
  std::vector<Term> quotient;
  Polynomial rest = h;
  while (!rest.is_zero()) {
    const Term lead = rest.terms().front();
    if (!f.leading_monomial().divides(lead.monomial)) {
      throw InvalidArgument(format(f) + " does not divide " + format(h));
    }
    const Monomial m = lead.monomial.quotient(f.leading_monomial());
    const Residue c = field.mul(lead.coefficient, inv_lead);
    quotient.push_back({m, c});
    rest = axpy(rest, c, m, f);
  }
  return Polynomial::from_terms(h.ring(), std::move(quotient));
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return basis;
  const RingPtr ring = basis.front().ring();
  for (const auto& g : basis) require_same_ring(*ring, *g.ring());
  const auto& order = ring->order();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (order.greater(best->lcm, it->lcm)) best = it;
    }
    const Pair pair = *best;
    pairs.erase(best);
    if (coprime(basis[pair.i].leading_monomial(), basis[pair.j].leading_monomial())) continue;
    Polynomial h = reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: keep one element per minimal leading monomial.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = basis[j].leading_monomial();
      if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce each element by the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = reduce(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators_) {
    if (g.ring().get() != ring_.get()) {
      if (g.ring()->nvars() != ring_->nvars() || !(g.field() == ring_->field())) {
        throw ContextMismatch("ideal generator from a different ring");
      }
      if (!(*g.ring() == *ring_)) g = g.in_ring(ring_);
    }
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(generators_); });
  return cache_->basis;
}

bool Ideal::is_graded() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  return reduce(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g.in_ring(ring_)); });
}

MonomialIdeal Ideal::initial_ideal() const {
  std::vector<Monomial> lms;
  for (const auto& g : groebner_basis()) lms.push_back(g.leading_monomial());
  return MonomialIdeal(ring_->nvars(), std::move(lms));
}

std::vector<Monomial> Ideal::footprint_degree_slice(std::uint64_t d) const {
  const MonomialIdeal initial = initial_ideal();
  std::vector<Monomial> out;
  for (const auto& m : ring_->monomials_of_degree(d)) {
    if (!initial.contains(m)) out.push_back(m);
  }
  return out;
}

std::uint64_t Ideal::hilbert_function(std::uint64_t d) const {
  if (!is_graded()) throw InvalidArgument("Hilbert function of a non-graded ideal");
  return initial_ideal().hilbert_function(d);
}

GradedQuotientSummary Ideal::degree_of_quotient() const {
  if (!is_graded()) throw InvalidArgument("degree of a non-graded ideal");
  return initial_ideal().summary();
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) { return ideal.normal_form(f); }
std::uint64_t hilbert_function(const Ideal& ideal, std::uint64_t d) {
  return ideal.hilbert_function(d);
}
std::vector<Monomial> footprint_degree_slice(const Ideal& ideal, std::uint64_t d) {
  return ideal.footprint_degree_slice(d);
}
GradedQuotientSummary degree_of_quotient(const Ideal& ideal) { return ideal.degree_of_quotient(); }

bool ideals_equal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

Ideal ideal_sum(const Ideal& ideal, std::span<const Polynomial> extra) {
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& f : extra) gens.push_back(f.in_ring(ideal.ring()));
  return Ideal(ideal.ring(), std::move(gens));
}

namespace {

// Shifts f into a ring with an extra leading variable w.
Polynomial lift(const Polynomial& f, const RingPtr& lifted) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(lifted->nvars());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) m.set(i + 1, t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(lifted, std::move(terms));
}

std::optional<Polynomial> drop_first_variable(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.monomial[0] != 0) return std::nullopt;
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < m.size(); ++i) m.set(i, t.monomial[i + 1]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  auto nonzero = [](const Ideal& i) {
    return std::any_of(i.generators().begin(), i.generators().end(),
                       [](const Polynomial& g) { return !g.is_zero(); });
  };
  if (!nonzero(a) || !nonzero(b)) return Ideal(ring, {});
  if (ring->nvars() + 1 > kMaxVariables) {
    throw InvalidArgument("intersection needs one variable beyond the supported maximum");
  }
  const RingPtr lifted = std::make_shared<const PolynomialRing>(
      ring->field(), ring->nvars() + 1, MonomialOrder(OrderKind::elimination));
  const Polynomial w = Polynomial::variable(lifted, 0);
  const Polynomial one_minus_w = Polynomial::constant(lifted, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * lift(f, lifted));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * lift(g, lifted));
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens)) {
    if (auto dropped = drop_first_variable(g, ring)) kept.push_back(std::move(*dropped));
  }
  return Ideal(ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& ideal, std::span<const Polynomial> fs) {
  if (fs.empty()) throw InvalidArgument("ideal quotient by an empty polynomial list");
  std::optional<Ideal> acc;
  for (const auto& f0 : fs) {
    if (f0.is_zero()) throw InvalidArgument("ideal quotient by the zero polynomial");
    const Polynomial f = f0.in_ring(ideal.ring());
    const Ideal meet = ideal_intersection(ideal, Ideal(ideal.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, f));
    Ideal part(ideal.ring(), std::move(gens));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return *acc;
}

StandardEchelon standard_echelon(const Ideal& ideal, std::uint64_t d,
                                 std::span<const Polynomial> polys) {
  StandardEchelon out;
  out.columns = ideal.footprint_degree_slice(d);
  const auto& field = ideal.ring()->field();
  linalg::Matrix coords(polys.size(), out.columns.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].is_homogeneous(d) || polys[i].is_zero()) {
      throw InvalidArgument("polynomial " + format(polys[i]) +
                            " is not a nonzero form of degree " + std::to_string(d));
    }
    const Polynomial nf = ideal.normal_form(polys[i].in_ring(ideal.ring()));
    for (const auto& t : nf.terms()) {
      const auto it = std::find(out.columns.begin(), out.columns.end(), t.monomial);
      coords(i, static_cast<std::size_t>(it - out.columns.begin())) = t.coefficient;
    }
  }
  if (linalg::rank(coords, field) < polys.size()) {
    const linalg::Matrix deps = linalg::kernel(coords.transposed(), field);
    out.dependency = std::vector<Residue>(deps.row(0).begin(), deps.row(0).end());
  }
  out.coordinates = linalg::row_space_basis(coords, field);
  for (std::size_t i = 0; i < out.coordinates.rows(); ++i) {
    std::vector<Term> terms;
    std::optional<Monomial> lead;
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      const Residue v = out.coordinates(i, c);
      if (v == 0) continue;
      if (!lead) lead = out.columns[c];
      terms.push_back({out.columns[c], v});
    }
    out.polynomials.push_back(Polynomial::from_terms(ideal.ring(), std::move(terms)));
    out.leading.push_back(*lead);
  }
  return out;
}

}  // namespace rghw
