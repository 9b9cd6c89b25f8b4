#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lyagraph {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix. Entries are 64-bit; operations that can
/// grow entries (Smith form, determinant) switch to BigInt internally.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const std::int64_t> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> entries() const { return data_; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// I - A for a square matrix A.
IntMatrix identity_minus(const IntMatrix& a);

/// Matrix over F2 with each row packed into 64-bit words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);

  /// Packed words of row r; bits past cols() are always zero.
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }

  F2Matrix transpose() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  friend std::size_t f2_rank(const F2Matrix& m);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SmithForm {
  /// d1 | d2 | ... | dr followed by zeros; length min(rows, cols).
  std::vector<BigInt> invariant_factors;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

F2Matrix mod2_reduce(const IntMatrix& a);

std::size_t f2_rank(const F2Matrix& m);

/// Dimension of the kernel of a square F2 matrix. Throws std::invalid_argument
/// when m is not square.
std::size_t f2_kernel_dim(const F2Matrix& m);

SmithForm smith_normal_form(const IntMatrix& a);

/// |det(a)| by Bareiss elimination. Throws std::invalid_argument when a is
/// not square.
BigInt det_abs(const IntMatrix& a);

}  // namespace lyagraph
