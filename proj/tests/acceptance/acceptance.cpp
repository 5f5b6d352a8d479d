// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rghw/weights.hpp"
#include "support.hpp"

using namespace rghw;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Check()>& body) {
  const auto start = Clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds >= limit_seconds) {
    c.expect(false, "took " + std::to_string(seconds) + " s");
    c.ok = false;
  }
  std::printf("[%s] %d %s (%.2f s, limit %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, seconds,
              limit_seconds, c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::string cell(std::uint64_t d, std::size_t r) { return "(" + std::to_string(d) + "," + std::to_string(r) + ")"; }

const int kExampleOneMatrix[6][16] = {
    {12, 15, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {8, 11, 12, 14, 15, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {4, 7, 8, 10, 11, 12, 13, 14, 15, 16, 0, 0, 0, 0, 0, 0},
    {3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 0, 0, 0},
    {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 0},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
};

Check table_one() {
  Check c;
  const auto ring = PolynomialRing::make(5, 3);
  const Ideal i(ring, parse_polynomial_list("t1^4 - t3^4, t2^4 - t3^4", ring));
  const std::uint64_t expected[] = {3, 6, 10, 13, 15, 16};
  for (std::uint64_t d = 1; d <= 6; ++d) {
    c.expect(i.hilbert_function(d) == expected[d - 1], "H" + std::to_string(d));
  }
  const auto summary = i.degree_of_quotient();
  c.expect(summary.dimension == 1, "dimension");
  c.expect(summary.degree == 16, "degree");
  c.expect(summary.reg_index == 6u, "reg_index");
  return c;
}

Check example_one_matrix() {
  Check c;
  const auto x = projective_torus(5, 3);
  const Ideal i = vanishing_ideal(x);
  WeightOptions single;
  single.threads = 1;
  for (std::uint64_t d = 1; d <= 6; ++d) {
    const std::uint64_t h = i.hilbert_function(d);
    for (std::size_t r = 1; r <= 16; ++r) {
      const int expected = kExampleOneMatrix[d - 1][r - 1];
      c.expect((expected != 0) == (r <= h), "range at " + cell(d, r));
      if (r > h) continue;
      const auto fp = rgff(i, d, r, {}, single);
      c.expect(fp.value == expected, "fp" + cell(d, r) + " = " + std::to_string(fp.value));
    }
  }
  return c;
}

Check example_one_identification() {
  Check c;
  const auto x = projective_torus(5, 3);
  const Ideal i = vanishing_ideal(x);
  for (std::uint64_t d = 1; d <= 2; ++d) {
    const auto code = build_code(x, i, d);
    const auto none = validate_subcode(code, {});
    for (std::size_t r = 1; r <= code.dimension(); ++r) {
      const auto delta = rgmdf(code, none, r).value;
      const auto fp = rgff(code, none, r).value;
      const auto m = static_cast<std::int64_t>(rghw_bruteforce(code, none, r).value);
      c.expect(delta == fp && fp == m && m == kExampleOneMatrix[d - 1][r - 1],
               cell(d, r) + " delta " + std::to_string(delta) + " fp " + std::to_string(fp) + " M " +
                   std::to_string(m));
    }
  }
  return c;
}

Check example_two() {
  Check c;
  const auto x = projective_torus(3, 4);
  const auto code = build_code(x, 1);
  const auto sub = validate_subcode(code, parse_polynomial_list("t1", code.vanishing.ring()));
  const std::int64_t expected[] = {4, 6, 7};
  const std::size_t singleton[] = {5, 6, 7};
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto w = relative_weights(code, sub, r);
    const auto fp = rgff(code, sub, r).value;
    const auto m = rghw_bruteforce(code, sub, r).value;
    const auto bound = singleton_bound(code, sub, r);
    const std::string at = "r=" + std::to_string(r);
    c.expect(fp == expected[r - 1], "fp " + at);
    c.expect(w.delta.value == expected[r - 1], "delta " + at);
    c.expect(w.vasconcelos.value == expected[r - 1], "vasconcelos " + at);
    c.expect(static_cast<std::int64_t>(m) == expected[r - 1], "M " + at);
    c.expect(bound == singleton[r - 1], "singleton " + at);
    c.expect(m <= bound, "M <= singleton " + at);
    if (r >= 2) c.expect(m == bound, "singleton equality " + at);
  }
  return c;
}

// Cost of an exhaustive sweep over every (k1, r), in enumerated subspaces.
std::uint64_t sweep_cost(std::size_t k, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::size_t k1 = 0; k1 < k; ++k1) {
    for (std::size_t r = 1; r + k1 <= k; ++r) total += linalg::gaussian_binomial(k, r, q);
  }
  return total;
}

std::uint64_t power(std::uint64_t q, std::uint64_t e) {
  std::uint64_t p = 1;
  while (e-- > 0) p *= q;
  return p;
}

constexpr std::uint64_t kSweepCap = 20'000'000;
constexpr std::uint64_t kAmbientCap = 20'000'000;

Check property_suites() {
  Check c;
  gen::Rng rng(20240917);
  int instances = 0, redraws = 0, comparisons = 0;
  int restricted_instances = 0, restricted_skipped = 0;
  while (instances < 60) {
    const std::uint32_t q = static_cast<std::uint32_t>(gen::uniform(rng, 2, 3));
    const std::size_t s = gen::uniform(rng, 3, 4);
    const std::size_t size = gen::uniform(rng, 3, 8);
    const std::uint64_t d = gen::uniform(rng, 1, 2);
    const auto x = gen::random_point_set(rng, q, s, size);
    const Ideal ix = vanishing_ideal(x);
    const auto code = build_code(x, ix, d);
    const std::size_t k = code.dimension();
    if (sweep_cost(k, q) > kSweepCap) {
      ++redraws;
      continue;
    }
    ++instances;
    const std::uint64_t ambient = code.vanishing.ring()->monomials_of_degree(d).size();
    const bool standard_check = power(q, k) <= 243;
    bool ambient_ok = standard_check;
    if (standard_check) {
      std::uint64_t ambient_cost = 0;
      for (std::size_t r = 1; r <= k; ++r) ambient_cost += linalg::gaussian_binomial(ambient, r, q);
      ambient_ok = ambient_cost * k <= kAmbientCap;
      if (ambient_ok) {
        ++restricted_instances;
      } else {
        ++restricted_skipped;
        c.expect(d != 1, "d = 1 instance skipped for the standard restriction");
      }
    }
    for (std::size_t k1 = 0; k1 < k; ++k1) {
      std::vector<Polynomial> g;
      while (true) {
        g.clear();
        for (std::size_t i = 0; i < k1; ++i) g.push_back(gen::random_form(rng, ix.ring(), d));
        try {
          validate_subcode(code, g);
          break;
        } catch (const DependentGenerators&) {
        }
      }
      const auto sub = validate_subcode(code, g);
      for (std::size_t r = 1; r + k1 <= k; ++r) {
        const auto w = relative_weights(code, sub, r);
        const auto m = static_cast<std::int64_t>(rghw_bruteforce(code, sub, r).value);
        const auto fp = rgff(code, sub, r).value;
        const std::string at = "instance " + std::to_string(instances) + " k1=" + std::to_string(k1) +
                               " r=" + std::to_string(r);
        c.expect(w.delta.value == m, "rgmdf != bruteforce at " + at);
        c.expect(w.vasconcelos.value == m, "vasconcelos != bruteforce at " + at);
        c.expect(fp <= w.delta.value, "rgff > rgmdf at " + at);
        if (ambient_ok) {
          c.expect(rgmdf_unrestricted(code, sub, r).value == w.delta.value, "unrestricted at " + at);
        }
        ++comparisons;
      }
    }
  }

  int support_checks = 0;
  while (support_checks < 100) {
    const std::uint32_t q = static_cast<std::uint32_t>(gen::uniform(rng, 2, 3));
    const std::size_t s = gen::uniform(rng, 3, 4);
    const auto x = gen::random_point_set(rng, q, s, gen::uniform(rng, 3, 8));
    const std::uint64_t d = gen::uniform(rng, 1, 2);
    const auto ring = PolynomialRing::make(q, s);
    std::vector<Polynomial> f;
    const std::size_t count = gen::uniform(rng, 1, 3);
    for (std::size_t i = 0; i < count; ++i) f.push_back(gen::random_form(rng, ring, d));
    const auto lambda = evaluation_matrix(x, f);
    c.expect(subspace_support(linalg::row_space_basis(lambda, x.field()), x.field()) == x.size() - zero_set(x, f).size(),
             "support mismatch on draw " + std::to_string(support_checks));
    ++support_checks;
  }
  c.expect(instances >= 50, "too few instances");
  c.expect(restricted_instances > 0, "no standard-restriction instances");
  if (c.ok) {
    c.detail = std::to_string(instances) + " instances (" + std::to_string(redraws) +
               " over-budget redraws), " + std::to_string(comparisons) + " (k1, r) cases, " +
               std::to_string(restricted_instances) + " unrestricted checks (" +
               std::to_string(restricted_skipped) + " d = 2 skipped), " + std::to_string(support_checks) +
               " support checks";
  }
  return c;
}

Check vanishing_ideals() {
  Check c;
  const auto t5 = projective_torus(5, 3);
  const Ideal paper5(PolynomialRing::make(5, 3),
                     parse_polynomial_list("t1^4 - t3^4, t2^4 - t3^4", PolynomialRing::make(5, 3)));
  c.expect(ideals_equal(vanishing_ideal(t5), paper5), "F5 torus");
  const auto r3 = PolynomialRing::make(3, 4);
  const Ideal paper3(r3, parse_polynomial_list("t1^2 - t4^2, t2^2 - t4^2, t3^2 - t4^2", r3));
  c.expect(ideals_equal(vanishing_ideal(projective_torus(3, 4)), paper3), "F3 torus");
  gen::Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t q = static_cast<std::uint32_t>(gen::uniform(rng, 2, 3));
    const std::size_t s = gen::uniform(rng, 2, 4);
    const auto x = gen::random_point_set(rng, q, s, gen::uniform(rng, 1, 6));
    const auto ring = PolynomialRing::make(q, s);
    Ideal meet = point_ideal(x.points()[0], ring);
    for (std::size_t i = 1; i < x.size(); ++i) meet = ideal_intersection(meet, point_ideal(x.points()[i], ring));
    c.expect(ideals_equal(vanishing_ideal(x), meet), "random set " + std::to_string(trial));
  }
  return c;
}

}  // namespace

int main() {
  criterion(1, "Hilbert function of (t1^4 - t3^4, t2^4 - t3^4) over F5", 1, table_one);
  criterion(2, "F5 torus footprint matrix, 6 x 16", 30, example_one_matrix);
  criterion(3, "F5 torus: delta = fp = brute force for d <= 2", 300, example_one_identification);
  criterion(4, "F3 torus with G = {t1}: fp, delta, vartheta, M_r, Singleton", 10, example_two);
  criterion(5, "random instances: three-way agreement, lower bound, restriction, support", 600,
            property_suites);
  criterion(6, "vanishing ideals vs reference generators and point-ideal intersections", 120,
            vanishing_ideals);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
