#include <gtest/gtest.h>

#include "rghw/error.hpp"
#include "rghw/monideal.hpp"
#include "support.hpp"

using namespace rghw;

namespace {

std::vector<Monomial> all_monomials(std::size_t nvars, std::uint64_t d) {
  return PolynomialRing(PrimeField(2), nvars).monomials_of_degree(d);
}

std::uint64_t count_standard(const MonomialIdeal& j, std::uint64_t d) {
  std::uint64_t n = 0;
  for (const auto& m : all_monomials(j.nvars(), d)) n += j.contains(m) ? 0 : 1;
  return n;
}

// Walks the box [0, bound] in the variables other than `skip`.
template <class Visit>
void for_each_in_box(const Monomial& bound, std::size_t skip, Visit&& visit) {
  Monomial u(bound.size());
  while (true) {
    visit(u);
    std::size_t i = 0;
    for (; i < bound.size(); ++i) {
      if (i == skip) continue;
      if (u[i] < bound[i]) {
        u.set(i, u[i] + 1);
        break;
      }
      u.set(i, 0);
    }
    if (i == bound.size()) return;
  }
}

// Degree from the ray decomposition: for dimension one every standard
// monomial of large degree has exactly one unbounded exponent, so the
// stable count is the number of standard monomials of the dehomogenized
// ideals J(t_i = 1).  Returns nullopt when some J(t_i = 1) has infinite
// colength (dimension two or more).
std::optional<std::uint64_t> ray_degree(const MonomialIdeal& j) {
  const std::size_t n = j.nvars();
  Monomial bound(n);
  for (const auto& g : j.generators()) bound = lcm(bound, g);
  std::uint64_t total = 0;
  bool any_ray = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Monomial> gens;
    for (auto g : j.generators()) {
      g.set(i, 0);
      gens.push_back(g);
    }
    const MonomialIdeal ji(n, gens);
    if (ji.is_unit()) continue;
    any_ray = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == i) continue;
      if (!ji.contains(Monomial::variable(n, v, bound[v] + 1))) return std::nullopt;
    }
    for_each_in_box(bound, i, [&](const Monomial& u) { total += ji.contains(u) ? 0 : 1; });
  }
  if (!any_ray) {
    std::uint64_t length = 0;
    Monomial box = bound;
    for_each_in_box(box, n, [&](const Monomial& u) { length += j.contains(u) ? 0 : 1; });
    return length;
  }
  return total;
}

MonomialIdeal random_low_dim_ideal(gen::Rng& rng, std::size_t nvars) {
  std::vector<Monomial> gens;
  const std::size_t free_var = gen::uniform(rng, 0, nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i == free_var) continue;
    gens.push_back(Monomial::variable(nvars, i, static_cast<std::uint32_t>(gen::uniform(rng, 1, 4))));
  }
  const std::size_t extra = gen::uniform(rng, 0, 4);
  for (std::size_t e = 0; e < extra; ++e) {
    auto m = gen::random_monomial(rng, nvars, 3);
    if (!m.is_one()) gens.push_back(m);
  }
  return MonomialIdeal(nvars, gens);
}

bool is_antichain(const MonomialIdeal& j) {
  const auto& g = j.generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a != b && g[a].divides(g[b])) return false;
    }
  }
  return true;
}

}  // namespace

TEST(MonomialIdealTest, Minimalization) {
  const MonomialIdeal j(3, {Monomial{2, 0, 0}, Monomial{2, 1, 0}, Monomial{0, 1, 0}, Monomial{2, 0, 0}});
  EXPECT_EQ(j.generators(), (std::vector<Monomial>{Monomial{0, 1, 0}, Monomial{2, 0, 0}}));
  EXPECT_TRUE(j.contains(Monomial{3, 0, 1}));
  EXPECT_FALSE(j.contains(Monomial{1, 0, 5}));
  EXPECT_TRUE(MonomialIdeal(2, {Monomial{0, 0}}).is_unit());
  EXPECT_TRUE(MonomialIdeal(2).is_zero());
}

TEST(MonomialIdealTest, QuotientExamples) {
  const MonomialIdeal t1sq(1, {Monomial{2}});
  EXPECT_EQ(t1sq.quotient(Monomial{1}), MonomialIdeal(1, {Monomial{1}}));
  const MonomialIdeal j(4, {Monomial{2, 0, 0, 0}, Monomial{0, 2, 0, 0}, Monomial{0, 0, 2, 0}});
  EXPECT_EQ(j.quotient(Monomial{0, 0, 0, 1}), j);
  EXPECT_TRUE(equals(j, quotient_by_monomial(j, Monomial{0, 0, 0, 1})));
  EXPECT_EQ(j.quotient(Monomial{0, 1, 0, 0}),
            MonomialIdeal(4, {Monomial{2, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 2, 0}}));
  const std::vector<Monomial> m23{Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0}};
  EXPECT_FALSE(equals(quotient_by_set(j, m23), j));
  EXPECT_TRUE(j.quotient_witness(m23).has_value());
  const std::vector<Monomial> m4{Monomial{0, 0, 0, 1}};
  EXPECT_FALSE(j.quotient_witness(m4).has_value());
  EXPECT_THROW(j.quotient(std::span<const Monomial>{}), InvalidArgument);
  EXPECT_TRUE(equals(MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 1}}),
                     MonomialIdeal(2, {Monomial{0, 1}, Monomial{1, 0}})));
  EXPECT_FALSE(equals(MonomialIdeal(1, {Monomial{1}}), MonomialIdeal(1, {Monomial{2}})));
}

TEST(MonomialIdealTest, DegreeExamples) {
  const MonomialIdeal j(4, {Monomial{2, 0, 0, 0}, Monomial{0, 2, 0, 0}, Monomial{0, 0, 2, 0}});
  const std::vector<Monomial> t2{Monomial{0, 1, 0, 0}};
  EXPECT_EQ(monomial_quotient_degree(j, t2).degree, 4u);
  EXPECT_EQ(j.degree(), 8u);
  const MonomialIdeal maximal(3, {Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}});
  EXPECT_EQ(maximal.summary().dimension, 0);
  EXPECT_EQ(maximal.degree(), 1u);
  const MonomialIdeal ex1(3, {Monomial{4, 0, 0}, Monomial{0, 4, 0}});
  const auto s = ex1.summary();
  EXPECT_EQ(s.degree, 16u);
  EXPECT_EQ(s.dimension, 1);
  ASSERT_TRUE(s.reg_index.has_value());
  EXPECT_EQ(*s.reg_index, 6u);
  EXPECT_THROW(MonomialIdeal(3, {Monomial{1, 0, 0}}).summary(), UnsupportedDimension);
  EXPECT_EQ(MonomialIdeal(3, {Monomial{0, 0, 0}}).krull_dimension(), -1);
}

TEST(MonomialIdealTest, HilbertAndDegreeAgreeWithOracles) {
  gen::Rng rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t nvars = gen::uniform(rng, 2, 4);
    const MonomialIdeal j = random_low_dim_ideal(rng, nvars);
    EXPECT_TRUE(is_antichain(j));
    for (std::uint64_t d = 0; d <= 6; ++d) EXPECT_EQ(j.hilbert_function(d), count_standard(j, d));
    const auto oracle = ray_degree(j);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(j.degree(), *oracle);
    const auto s = j.summary();
    EXPECT_EQ(s.degree, *oracle);
    if (s.dimension == 0) {
      std::uint64_t sum = 0;
      for (auto h : s.hilbert_values) sum += h;
      EXPECT_EQ(sum, s.degree);
    } else {
      ASSERT_TRUE(s.reg_index.has_value());
      for (std::uint64_t d = *s.reg_index; d < *s.reg_index + 4; ++d) EXPECT_EQ(j.hilbert_function(d), s.degree);
      if (*s.reg_index > 0) EXPECT_NE(j.hilbert_function(*s.reg_index - 1), s.degree);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(MonomialIdealTest, QuotientAndIntersectionProperties) {
  gen::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t nvars = gen::uniform(rng, 2, 4);
    const MonomialIdeal j = random_low_dim_ideal(rng, nvars);
    const MonomialIdeal l = random_low_dim_ideal(rng, nvars);
    const MonomialIdeal both = j.intersection(l);
    EXPECT_TRUE(is_antichain(both));
    EXPECT_TRUE(j.contains(both));
    EXPECT_TRUE(l.contains(both));
    std::vector<Monomial> ms;
    const std::size_t count = gen::uniform(rng, 1, 3);
    for (std::size_t i = 0; i < count; ++i) ms.push_back(gen::random_monomial(rng, nvars, 2));
    const MonomialIdeal colon = j.quotient(ms);
    EXPECT_TRUE(is_antichain(colon));
    EXPECT_TRUE(colon.contains(j));
    for (const auto& g : colon.generators()) {
      for (const auto& m : ms) EXPECT_TRUE(j.contains(g * m));
    }
    // Membership in the quotient agrees with the definition on a box.
    for (int probe = 0; probe < 20; ++probe) {
      const auto u = gen::random_monomial(rng, nvars, 4);
      const bool by_definition = std::all_of(ms.begin(), ms.end(), [&](const Monomial& m) { return j.contains(u * m); });
      EXPECT_EQ(colon.contains(u), by_definition);
    }
    const auto witness = j.quotient_witness(ms);
    EXPECT_EQ(witness.has_value(), !equals(colon, j));
    if (witness) {
      EXPECT_FALSE(j.contains(*witness));
      EXPECT_TRUE(colon.contains(*witness));
    }
  }
}
