#include "lyagraph/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

namespace lyagraph {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix identity_minus(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("identity_minus: matrix is not square");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = (r == c ? 1 : 0) - a(r, c);
  return out;
}

// ---------------------------------------------------------------------------
// F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& w = bits_[r * words_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  w = value ? (w | mask) : (w & ~mask);
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

F2Matrix mod2_reduce(const IntMatrix& a) {
  F2Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) & 1) m.set(r, c, true);
  return m;
}

std::size_t f2_rank(const F2Matrix& m) {
  std::vector<std::uint64_t> bits = m.bits_;
  const std::size_t words = m.words_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                       bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                       bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
    }
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      if (bits[r * words + w] & mask) {
        for (std::size_t k = w; k < words; ++k) bits[r * words + k] ^= bits[rank * words + k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t f2_kernel_dim(const F2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("f2_kernel_dim: matrix is not square");
  return m.cols() - f2_rank(m);
}

// ---------------------------------------------------------------------------
// Smith normal form and determinant

namespace {

using BigGrid = std::vector<std::vector<BigInt>>;

BigGrid to_big(const IntMatrix& a) {
  BigGrid g(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) g[r][c] = a(r, c);
  return g;
}

// Moves the entry of least nonzero magnitude in the trailing block starting
// at (t, t) to position (t, t). Returns false when the block is zero.
bool bring_min_to_pivot(BigGrid& m, std::size_t t) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t best_r = rows, best_c = cols;
  BigInt best;
  for (std::size_t r = t; r < rows; ++r) {
    for (std::size_t c = t; c < cols; ++c) {
      if (m[r][c] == 0) continue;
      BigInt v = abs(m[r][c]);
      if (best_r == rows || v < best) {
        best = std::move(v);
        best_r = r;
        best_c = c;
      }
    }
  }
  if (best_r == rows) return false;
  if (best_r != t) std::swap(m[best_r], m[t]);
  if (best_c != t)
    for (auto& row : m) std::swap(row[best_c], row[t]);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  SmithForm out;
  out.invariant_factors.assign(n, BigInt{0});
  if (n == 0) return out;

  BigGrid m = to_big(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < n; ++t) {
    if (!bring_min_to_pivot(m, t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const BigInt q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const BigInt q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot survived in row or column t.
      std::size_t best_r = t, best_c = t;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (m[r][t] != 0 && abs(m[r][t]) < abs(m[best_r][best_c])) best_r = r, best_c = t;
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m[t][c] != 0 && abs(m[t][c]) < abs(m[best_r][best_c])) best_r = t, best_c = c;
      if (best_r != t) std::swap(m[best_r], m[t]);
      if (best_c != t)
        for (auto& row : m) std::swap(row[best_c], row[t]);
    }
    diag.push_back(abs(m[t][t]));
  }

  // diag(a, b) ~ diag(gcd, lcm); repeated pairwise application yields the chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = boost::integer::gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  std::copy(diag.begin(), diag.end(), out.invariant_factors.begin());
  return out;
}

BigInt det_abs(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("det_abs: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigGrid m = to_big(a);
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return abs(m[n - 1][n - 1]);
}

}  // namespace lyagraph
