#include <gtest/gtest.h>

#include "rghw/error.hpp"
#include "rghw/points.hpp"
#include "support.hpp"

using namespace rghw;

namespace {

Ideal intersection_of_point_ideals(const ProjectivePointSet& x, const RingPtr& ring) {
  Ideal acc = point_ideal(x[0], ring);
  for (std::size_t i = 1; i < x.size(); ++i) acc = ideal_intersection(acc, point_ideal(x[i], ring));
  return acc;
}

void expect_vanishing_invariants(const ProjectivePointSet& x, const Ideal& ix) {
  for (const auto& g : ix.groebner_basis()) {
    for (std::size_t p = 0; p < x.size(); ++p) EXPECT_EQ(g.evaluate(x[p].coordinates()), 0u);
  }
  const auto s = ix.degree_of_quotient();
  EXPECT_EQ(s.dimension, 1);
  EXPECT_EQ(s.degree, x.size());
  ASSERT_TRUE(s.reg_index.has_value());
  for (std::uint64_t d = 1; d <= *s.reg_index + 2; ++d) {
    const auto mons = ix.ring()->monomials_of_degree(d);
    EXPECT_EQ(ix.hilbert_function(d), linalg::rank(evaluation_matrix(x, mons), x.field())) << d;
  }
}

}  // namespace

TEST(PointsTest, Normalize) {
  const PrimeField f5(5);
  EXPECT_EQ(normalize(std::vector<std::int64_t>{2, 4, 0}, f5).to_string(), "1:2:0");
  EXPECT_EQ(normalize(std::vector<std::int64_t>{0, 0, 3}, f5).to_string(), "0:0:1");
  EXPECT_EQ(normalize(std::vector<std::int64_t>{1, 3, 4}, f5).to_string(), "1:3:4");
  EXPECT_EQ(normalize(std::vector<std::int64_t>{-1, 7, 5}, f5).to_string(), "1:3:0");
  EXPECT_THROW(normalize(std::vector<std::int64_t>{0, 5, 0}, f5), InvalidArgument);
}

TEST(PointsTest, Constructors) {
  EXPECT_EQ(projective_torus(5, 3).size(), 16u);
  EXPECT_EQ(projective_torus(3, 4).size(), 8u);
  const auto tiny = projective_torus(2, 5);
  ASSERT_EQ(tiny.size(), 1u);
  EXPECT_EQ(tiny[0].to_string(), "1:1:1:1:1");
  const auto t3 = projective_torus(3, 3);
  EXPECT_EQ(t3[0].to_string(), "1:1:1");
  EXPECT_EQ(t3[1].to_string(), "1:1:2");
  EXPECT_EQ(t3[2].to_string(), "1:2:1");
  EXPECT_THROW(projective_torus(4, 3), InvalidArgument);
  EXPECT_THROW(projective_torus(5, 1), InvalidArgument);

  const PrimeField f3(3), f5(5);
  EXPECT_EQ(affine_cartesian(f3, {{0, 1, 2}, {0, 1, 2}}).size(), 9u);
  EXPECT_EQ(affine_cartesian(f3, {{1}, {2}}).size(), 1u);
  const auto c = affine_cartesian(f5, {{0, 1}, {0, 1}});
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].to_string(), "0:0:1");
  EXPECT_EQ(c[3].to_string(), "1:1:1");
  EXPECT_THROW(affine_cartesian(f5, {{0, 1}, {}}), InvalidArgument);
  EXPECT_THROW(affine_cartesian(f5, {{0, 5}}), InvalidArgument);

  EXPECT_EQ(projective_space(3, 3).size(), 13u);
  EXPECT_EQ(projective_space(2, 4).size(), 15u);
}

TEST(PointsTest, PointList) {
  const PrimeField f5(5);
  const auto x = parse_point_list("# points\n1:2:0\n 2 : 4 : 1 # scaled\n\n0:0:3\n", f5);
  ASSERT_EQ(x.size(), 3u);
  EXPECT_EQ(x.ambient(), 3u);
  EXPECT_EQ(x[1].to_string(), "1:2:3");
  EXPECT_EQ(x[2].to_string(), "0:0:1");
  EXPECT_THROW(parse_point_list("1:2:0\n2:4:0\n", f5), InvalidArgument);
  try {
    parse_point_list("1:2:0\n1:x:0\n", f5);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_EQ(e.offset(), 8u);
  }
  EXPECT_THROW(parse_point_list("1:2\n1:2:3\n", f5), ParseError);
  EXPECT_THROW(parse_point_list("0:0\n", f5), ParseError);
  EXPECT_THROW(parse_point_list("# nothing\n", f5), ParseError);
}

TEST(PointsTest, EvaluationMatrix) {
  const auto x = projective_torus(3, 4);
  const auto ring = PolynomialRing::make(3, 4);
  const auto row = evaluation_matrix(x, parse_polynomial_list("t1", ring));
  ASSERT_EQ(row.cols(), 8u);
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(row(0, c), 1u);
  const auto zero = evaluation_matrix(x, parse_polynomial_list("t1^2 - t4^2", ring));
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(zero(0, c), 0u);
  const auto single = parse_point_list("1:0:0", PrimeField(3));
  const auto m = evaluation_matrix(single, PolynomialRing::make(3, 3)->monomials_of_degree(1));
  EXPECT_EQ(m(0, 0), 1u);
  EXPECT_EQ(m(1, 0), 0u);
  EXPECT_THROW(evaluation_matrix(x, parse_polynomial_list("t1 + t2^2", ring)), InvalidArgument);
  EXPECT_THROW(evaluation_matrix(x, parse_polynomial_list("t1, t2^2", ring)), InvalidArgument);
}

TEST(PointsTest, ZeroSets) {
  const auto t2 = projective_torus(5, 3);
  const auto r5 = PolynomialRing::make(5, 3);
  EXPECT_TRUE(zero_set(t2, parse_polynomial_list("t1", r5)).empty());
  const auto t3 = projective_torus(3, 4);
  const auto r3 = PolynomialRing::make(3, 4);
  const auto v = zero_set(t3, parse_polynomial_list("t1 - t2", r3));
  ASSERT_EQ(v.size(), 4u);
  for (auto i : v) EXPECT_EQ(t3[i][0], t3[i][1]);
  const Ideal ix = vanishing_ideal(t3);
  EXPECT_EQ(zero_set(t3, ix.groebner_basis()).size(), 8u);
}

TEST(PointsTest, VanishingIdealsOfPaperTori) {
  const auto t2 = projective_torus(5, 3);
  const Ideal i2 = vanishing_ideal(t2);
  const auto r5 = i2.ring();
  EXPECT_TRUE(ideals_equal(i2, Ideal(r5, parse_polynomial_list("t1^4 - t3^4, t2^4 - t3^4", r5))));
  expect_vanishing_invariants(t2, i2);

  const auto t3 = projective_torus(3, 4);
  const Ideal i3 = vanishing_ideal(t3);
  const auto r3 = i3.ring();
  EXPECT_TRUE(ideals_equal(
      i3, Ideal(r3, parse_polynomial_list("t1^2 - t4^2, t2^2 - t4^2, t3^2 - t4^2", r3))));
  expect_vanishing_invariants(t3, i3);

  const auto single = parse_point_list("1:0:0", PrimeField(5));
  const Ideal is = vanishing_ideal(single);
  EXPECT_TRUE(ideals_equal(is, Ideal(is.ring(), parse_polynomial_list("t2, t3", is.ring()))));
}

TEST(PointsTest, VanishingIdealMatchesIntersectionOfPointIdeals) {
  gen::Rng rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t q = trial % 2 == 0 ? 2 : 3;
    const std::size_t s = 3 + static_cast<std::size_t>(trial % 3 == 0);
    const auto x = gen::random_point_set(rng, q, s, gen::uniform(rng, 1, 6));
    const Ideal ix = vanishing_ideal(x);
    const Ideal oracle = intersection_of_point_ideals(x, ix.ring());
    EXPECT_TRUE(ideals_equal(ix, oracle)) << "trial " << trial;
    expect_vanishing_invariants(x, ix);
  }
}

TEST(PointsTest, VanishingIdealUnderOtherOrders) {
  gen::Rng rng(4);
  for (auto kind : {OrderKind::lex, OrderKind::grlex}) {
    const auto x = gen::random_point_set(rng, 3, 3, 7);
    const Ideal ix = vanishing_ideal(x, MonomialOrder(kind));
    EXPECT_EQ(ix.ring()->order().kind(), kind);
    expect_vanishing_invariants(x, ix);
    const Ideal grevlex = vanishing_ideal(x);
    for (std::uint64_t d = 0; d < 6; ++d) EXPECT_EQ(ix.hilbert_function(d), grevlex.hilbert_function(d));
  }
}

TEST(PointsTest, DegreeDropMatchesZeroSet) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen::random_point_set(rng, 3, 3, gen::uniform(rng, 3, 8));
    const Ideal ix = vanishing_ideal(x);
    const std::vector<Polynomial> f{gen::random_form(rng, ix.ring(), gen::uniform(rng, 1, 2))};
    const auto v = zero_set(x, f);
    if (v.empty()) continue;
    const auto with_f = ideal_sum(ix, f).degree_of_quotient().degree;
    EXPECT_EQ(x.size() - v.size(), x.size() - with_f);
    EXPECT_EQ(with_f, v.size());
  }
}
