#include "rghw/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "rghw/error.hpp"

namespace rghw::linalg {

void Matrix::append_row(std::span<const Residue> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw InvalidArgument("stacking matrices of different widths");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m, const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      auto a = m.row(pivot), b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Residue inv = field.inv(m(lead_row, col));
    for (auto& x : m.row(lead_row)) x = field.mul(x, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Residue factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(lead_row, c)));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field) { return rref(m, field).size(); }

Matrix kernel(const Matrix& m, const PrimeField& field) {
  Matrix reduced = m;
  const auto pivots = rref(reduced, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(reduced(i, free));
    out.append_row(v);
  }
  return out;
}

Matrix row_space_basis(Matrix m, const PrimeField& field) {
  const auto pivots = rref(m, field);
  m.truncate_rows(pivots.size());
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(x, b(k, j)));
      }
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ using U128 = unsigned __int128;
  U128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t q) {
  if (r > n) return 0;
  // Sum over pivot patterns of q^(free entries), scanning columns right to
  // left.  ways[j][i] = weighted patterns with i pivots among the last j
  // columns.  A non-pivot column is free in each of the r - i rows whose
  // pivots still lie to its left.
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(r + 1, 0));
  ways[0][0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i <= std::min(j, r); ++i) {
      std::uint64_t qpow = 1;
      for (std::size_t k = 0; k < r - i; ++k) qpow = sat_mul(qpow, q);
      std::uint64_t total = sat_mul(ways[j - 1][i], qpow);
      if (i > 0) {
        const std::uint64_t pivot = ways[j - 1][i - 1];
        total = total > kSaturated - pivot ? kSaturated : total + pivot;
      }
      ways[j][i] = total;
    }
  }
  return ways[n][r];
}

EchelonSubspaces::EchelonSubspaces(std::size_t n, std::size_t r, const PrimeField& field)
    : n_(n), r_(r), field_(field) {
  if (r > n) throw InvalidArgument("subspace rank exceeds ambient dimension");
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    patterns_.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::uint64_t EchelonSubspaces::count() const noexcept {
  return gaussian_binomial(n_, r_, field_.modulus());
}

void EchelonSubspaces::for_each_in_pattern(std::size_t pattern_index,
                                           const std::function<void(const Matrix&)>& visit) const {
  const auto& pivots = patterns_.at(pattern_index);
  Matrix basis(r_, n_);
  std::vector<bool> is_pivot(n_, false);
  for (auto p : pivots) is_pivot[p] = true;
  // Free positions: (row, col) with col > pivot[row] and col not a pivot.
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < r_; ++i) {
    basis(i, pivots[i]) = 1;
    for (std::size_t c = pivots[i] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free.emplace_back(i, c);
    }
  }
  const Residue q = field_.modulus();
  while (true) {
    visit(basis);
    // Odometer increment over the free entries, last entry fastest.
    std::size_t k = free.size();
    while (k > 0) {
      auto [i, c] = free[k - 1];
      if (++basis(i, c) < q) break;
      basis(i, c) = 0;
      --k;
    }
    if (k == 0) return;
  }
}

void EchelonSubspaces::for_each(const std::function<void(const Matrix&)>& visit) const {
  for (std::size_t p = 0; p < patterns_.size(); ++p) for_each_in_pattern(p, visit);
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < n; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rghw::linalg
