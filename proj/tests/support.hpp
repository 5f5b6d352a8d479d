#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rghw/points.hpp"
#include "rghw/polyring.hpp"

namespace rghw::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Residue random_residue(Rng& rng, std::uint32_t q) {
  return static_cast<Residue>(uniform(rng, 0, q - 1));
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m.set(i, static_cast<std::uint32_t>(uniform(rng, 0, max_exp)));
  return m;
}

inline Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::size_t terms,
                                    std::uint32_t max_exp) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    out.push_back({random_monomial(rng, ring->nvars(), max_exp), random_residue(rng, ring->field().modulus())});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

/// A nonzero form of degree d with each degree-d monomial present with
/// probability one half.
inline Polynomial random_form(Rng& rng, const RingPtr& ring, std::uint64_t d) {
  const auto mons = ring->monomials_of_degree(d);
  while (true) {
    std::vector<Term> out;
    for (const auto& m : mons) {
      if (uniform(rng, 0, 1) == 0) continue;
      out.push_back({m, static_cast<Residue>(uniform(rng, 1, ring->field().modulus() - 1))});
    }
    auto f = Polynomial::from_terms(ring, std::move(out));
    if (!f.is_zero()) return f;
  }
}

/// A random subset of P^{s-1} of the given size, in random order.
inline ProjectivePointSet random_point_set(Rng& rng, std::uint32_t q, std::size_t s, std::size_t size) {
  const auto all = projective_space(q, s);
  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(size, idx.size()));
  return all.subset(idx);
}

}  // namespace rghw::gen
