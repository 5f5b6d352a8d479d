#include "rghw/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace rghw {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const std::uint32_t> exponents)
    : Monomial(exponents.size()) {
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t exponent) {
  Monomial m(nvars);
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  m.exps_[index] = exponent;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw InvalidArgument("monomial " + format_monomial(divisor) +
                          " does not divide " + format_monomial(*this));
  }
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.size_ != b.size_) return false;
  return std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (std::uint32_t e : m.exponents()) h = h * 1000003u ^ e;
  return h;
}

// ----------------------------------------------------------- MonomialOrder

std::string_view MonomialOrder::name() const noexcept {
  switch (kind_) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::elimination: return "elimination";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "grevlex") return MonomialOrder(OrderKind::grevlex);
  if (name == "lex") return MonomialOrder(OrderKind::lex);
  if (name == "grlex") return MonomialOrder(OrderKind::grlex);
  throw InvalidArgument("unknown monomial order '" + std::string(name) + "'");
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Equal degree assumed: the monomial with the smaller exponent in the last
// differing variable is larger.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  return revlex_tail(a, b);
}

}  // namespace

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a,
                                                      const Monomial& b) const noexcept {
  switch (kind_) {
    case OrderKind::grevlex:
      return grevlex_compare(a, b);
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::grlex: {
      const auto da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return lex_compare(a, b);
    }
    case OrderKind::elimination:
      if (a.size() > 0 && a[0] != b[0]) return a[0] <=> b[0];
      return grevlex_compare(a, b);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) {
    throw ContextMismatch("comparing monomials with " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()) + " variables");
  }
  return compare_unchecked(a, b);
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a,
                             const Monomial& b) {
  return order.compare(a, b);
}

// ---------------------------------------------------------- PolynomialRing

PolynomialRing::PolynomialRing(PrimeField field, std::size_t nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(order) {
  if (nvars == 0 || nvars > kMaxVariables) {
    throw InvalidArgument("variable count must be in [1, " +
                          std::to_string(kMaxVariables) + "]");
  }
}

RingPtr PolynomialRing::make(std::uint32_t q, std::size_t nvars, MonomialOrder order) {
  return std::make_shared<const PolynomialRing>(PrimeField(q), nvars, order);
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolynomialRing>(field_, nvars_, order);
}

namespace {

void monomials_rec(std::size_t var, std::uint64_t remaining, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur.set(var, static_cast<std::uint32_t>(remaining));
    out.push_back(cur);
    return;
  }
  for (std::uint64_t e = remaining + 1; e-- > 0;) {
    cur.set(var, static_cast<std::uint32_t>(e));
    monomials_rec(var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> PolynomialRing::monomials_of_degree(std::uint64_t d) const {
  std::vector<Monomial> out;
  Monomial cur(nvars_);
  monomials_rec(0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
  return out;
}

void require_same_ring(const PolynomialRing& a, const PolynomialRing& b) {
  if (!(a == b)) {
    throw ContextMismatch("polynomials from different rings combined");
  }
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("null polynomial ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Residue r = ring->field().reduce(c);
  Polynomial p(ring);
  if (r != 0) p.terms_.push_back({Monomial(ring->nvars()), r});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Residue c) {
  if (m.size() != ring->nvars()) throw ContextMismatch("monomial variable count mismatch");
  Polynomial p(ring);
  c %= ring->field().modulus();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) {
      throw ContextMismatch("monomial variable count mismatch");
    }
    t.coefficient %= field.modulus();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient = field.add(out.back().coefficient, t.coefficient);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coefficient == 0; });
  return Polynomial(std::move(ring), std::move(out));
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
  return terms_.front().monomial;
}

FieldElement Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return FieldElement(terms_.front().coefficient, field().modulus());
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return FieldElement(t.coefficient, field().modulus());
  }
  return field().zero();
}

bool Polynomial::is_homogeneous(std::uint64_t d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || is_homogeneous(terms_.front().monomial.degree());
}

std::optional<std::uint64_t> Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->nvars() != ring_->nvars() || !(other->field() == ring_->field())) {
    throw ContextMismatch("re-keying into a ring with a different field or variables");
  }
  return from_terms(std::move(other), terms_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(terms_.front().coefficient));
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::scaled(Residue c) const {
  const auto& f = field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = f.mul(t.coefficient, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.modulus() != field().modulus()) {
    throw ContextMismatch("scalar from a different field");
  }
  return scaled(c.value());
}

Polynomial Polynomial::mul_term(const Monomial& m, Residue c) const {
  const auto& f = field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, f.mul(t.coefficient, c)});
  return Polynomial(ring_, std::move(out));
}

Residue Polynomial::evaluate(std::span<const Residue> point) const {
  const auto& f = field();
  if (point.size() != ring_->nvars()) {
    throw ContextMismatch("point dimension differs from variable count");
  }
  Residue sum = 0;
  for (const auto& t : terms_) {
    Residue v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      if (t.monomial[i] != 0) v = f.mul(v, f.pow(point[i], t.monomial[i]));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

namespace {

// Merge a + scale * b, both sorted decreasing.
std::vector<Term> merge_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               Residue scale, const PolynomialRing& ring) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Residue bc = field.mul(b[j].coefficient, scale);
    if (i == a.size()) {
      out.push_back({b[j++].monomial, bc});
      continue;
    }
    const auto cmp = order.compare_unchecked(a[i].monomial, b[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({b[j++].monomial, bc});
    } else {
      const Residue c = field.add(a[i].coefficient, bc);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  return Polynomial(a.ring_, merge_scaled(a.terms_, b.terms_, 1, *a.ring_));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  return Polynomial(a.ring_,
                    merge_scaled(a.terms_, b.terms_, a.field().modulus() - 1, *a.ring_));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(a.field().modulus() - 1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  const auto& field = a.field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prod.push_back({x.monomial * y.monomial, field.mul(x.coefficient, y.coefficient)});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial axpy(const Polynomial& f, Residue c, const Monomial& m, const Polynomial& g) {
  const auto& ring = *f.ring_;
  const auto& field = ring.field();
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& t : g.terms_) shifted.push_back({t.monomial * m, t.coefficient});
  return Polynomial(f.ring_, merge_scaled(f.terms_, shifted, field.neg(c % field.modulus()),
                                          ring));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InvalidArgument("leading monomial of the zero polynomial");
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    if (order.greater(t.monomial, *best)) best = &t.monomial;
  }
  return *best;
}

// ------------------------------------------------------------------ Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse_all() {
    Polynomial result = parse_expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

  Polynomial parse_expression() {
    Polynomial acc(ring_);
    while (true) {
      skip_ws();
      bool negative = false;
      while (peek() == '+' || peek() == '-') {
        negative ^= (peek() == '-');
        ++pos_;
        skip_ws();
      }
      Polynomial term = parse_term();
      acc = negative ? acc - term : acc + term;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

 private:
  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        acc = acc * parse_factor();
      } else if (peek() == 't') {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_factor() {
    skip_ws();
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = Polynomial::constant(ring_, parse_coefficient());
    } else if (peek() == 't') {
      const std::size_t start = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail_at("unknown variable", start);
      }
      std::uint64_t index = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        index = index * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (index > kMaxVariables) fail_at("unknown variable", start);
      }
      if (index == 0 || index > ring_->nvars()) fail_at("unknown variable", start);
      base = Polynomial::variable(ring_, index - 1);
    } else if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    } else {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::uint32_t e = parse_exponent();
      // The grammar has no parentheses, so a base is a single term or zero.
      if (base.is_zero()) return e == 0 ? Polynomial::constant(ring_, 1) : base;
      const Term& t = base.terms().front();
      Monomial m(ring_->nvars());
      for (std::size_t i = 0; i < m.size(); ++i) m.set(i, t.monomial[i] * e);
      return Polynomial::monomial(ring_, m, ring_->field().pow(t.coefficient, e));
    }
    return base;
  }

  std::int64_t parse_coefficient() {
    const auto q = ring_->field().modulus();
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = (value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % q;
    }
    return static_cast<std::int64_t>(value);
  }

  std::uint32_t parse_exponent() {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > kMaxParsedExponent) fail_at("exponent overflow", start);
    }
    return static_cast<std::uint32_t>(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  return Parser(text, std::move(ring)).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, RingPtr ring) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.offset());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// --------------------------------------------------------------- Formatter

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(t.coefficient);
    } else if (t.coefficient == 1) {
      out += format_monomial(t.monomial);
    } else {
      out += std::to_string(t.coefficient) + '*' + format_monomial(t.monomial);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << format_monomial(m);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format(f); }

}  // namespace rghw
