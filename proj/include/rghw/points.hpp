#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rghw/groebner.hpp"
#include "rghw/linalg.hpp"
#include "rghw/polyring.hpp"

namespace rghw {

/// A point of P^{s-1} in standard position: its first nonzero coordinate
/// is 1.
class ProjectivePoint {
 public:
  /// Scales `raw` by the inverse of its first nonzero entry.  Throws
  /// InvalidArgument for the zero vector.
  static ProjectivePoint normalize(std::span<const std::int64_t> raw, const PrimeField& field);

  std::span<const Residue> coordinates() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Residue operator[](std::size_t i) const noexcept { return coords_[i]; }
  /// "1:2:0".
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(std::vector<Residue> coords) : coords_(std::move(coords)) {}
  std::vector<Residue> coords_;
};

ProjectivePoint normalize(std::span<const std::int64_t> raw, const PrimeField& field);

/// X = {P1, ..., Pm}.  The order is fixed at construction and indexes
/// codeword coordinates.
class ProjectivePointSet {
 public:
  /// Throws InvalidArgument on duplicates, empty input or size mismatch.
  ProjectivePointSet(PrimeField field, std::size_t ambient, std::vector<ProjectivePoint> points);

  const PrimeField& field() const noexcept { return field_; }
  /// s, the number of homogeneous coordinates.
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const noexcept { return points_[i]; }

  ProjectivePointSet subset(std::span<const std::size_t> indices) const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<ProjectivePoint> points_;
};

/// Points of P^{s-1} with all coordinates nonzero, as [1:z2:...:zs] in
/// lexicographic order of (z2, ..., zs).
ProjectivePointSet projective_torus(std::uint32_t q, std::size_t s);

/// Image of A1 x ... x A_{s-1} under x -> [x:1], tuples in lexicographic
/// order of the factor listings.
ProjectivePointSet affine_cartesian(const PrimeField& field,
                                    const std::vector<std::vector<std::int64_t>>& factors);

/// Every point of P^{s-1}, in lexicographic order of standard coordinates.
ProjectivePointSet projective_space(std::uint32_t q, std::size_t s);

/// One point per line, coordinates separated by ':', '#' starts a comment.
/// Throws ParseError (offset into text) on malformed lines.
ProjectivePointSet parse_point_list(std::string_view text, const PrimeField& field);

/// Row i is (b_i(P1), ..., b_i(Pm)) for each basis element b_i.
linalg::Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Monomial> basis);
/// Polynomials must be homogeneous of one common degree.
linalg::Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Polynomial> basis);

/// I_X with its reduced Groebner basis, built degree by degree from the
/// kernels of the monomial evaluation matrices.
Ideal vanishing_ideal(const ProjectivePointSet& x, MonomialOrder order = {});

/// Ideal of a single point: the linear forms t_j - P_j t_i, where i is the
/// position of the leading 1.
Ideal point_ideal(const ProjectivePoint& p, const RingPtr& ring);

/// Indices of the points of X at which every f in fs vanishes.
std::vector<std::size_t> zero_set(const ProjectivePointSet& x, std::span<const Polynomial> fs);

}  // namespace rghw
