#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rghw/field.hpp"

namespace rghw::linalg {

/// Dense row-major matrix of residues modulo a prime.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Residue> values);
  /// Rows of `this` followed by rows of `other` (same column count).
  Matrix stacked(const Matrix& other) const;
  Matrix transposed() const;
  void truncate_rows(std::size_t n) {
    rows_ = n;
    data_.resize(rows_ * cols_);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.  Zero rows
/// end up at the bottom.
std::vector<std::size_t> rref(Matrix& m, const PrimeField& field);
std::size_t rank(Matrix m, const PrimeField& field);
/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix kernel(const Matrix& m, const PrimeField& field);
/// Nonzero rows of the RREF of m.
Matrix row_space_basis(Matrix m, const PrimeField& field);
/// rows(coefficients) * basis.
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field);

/// Number of r-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t q);
/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Enumerates the r-dimensional subspaces of F_q^n, each exactly once, by
/// their reduced row echelon bases.  Subspaces are grouped by pivot pattern
/// (strictly increasing column sets, in lexicographic order); within a
/// pattern the free entries run through all q^f assignments.
class EchelonSubspaces {
 public:
  EchelonSubspaces(std::size_t n, std::size_t r, const PrimeField& field);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }
  const std::vector<std::vector<std::size_t>>& patterns() const noexcept { return patterns_; }
  std::uint64_t count() const noexcept;

  /// Calls visit(basis) for every subspace with the given pivot pattern.
  /// The basis matrix is r x n and is reused between calls.
  void for_each_in_pattern(std::size_t pattern_index,
                           const std::function<void(const Matrix&)>& visit) const;
  void for_each(const std::function<void(const Matrix&)>& visit) const;

 private:
  std::size_t n_;
  std::size_t r_;
  PrimeField field_;
  std::vector<std::vector<std::size_t>> patterns_;
};

/// Runs task(i) for i in [0, count) on up to `threads` workers.  Each index
/// is processed exactly once; callers combine per-index results in index
/// order, which keeps the outcome independent of scheduling.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace rghw::linalg
