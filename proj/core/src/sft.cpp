#include "lyagraph/sft.hpp"

#include <stdexcept>

namespace lyagraph {

namespace {

void require_square(const IntMatrix& a, const char* what) {
  if (!a.square() || a.empty()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
  }
}

void require_nonnegative(const IntMatrix& a, const char* what) {
  for (std::int64_t e : a.entries()) {
    if (e < 0) throw std::invalid_argument(std::string(what) + ": negative matrix entry");
  }
}

// Vertices reachable from 0 by a path of positive length along arcs (or
// reversed arcs when backward).
std::vector<bool> reach_from_zero(const IntMatrix& a, bool backward) {
  const std::size_t n = a.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t arc = backward ? a(j, i) : a(i, j);
      if (arc > 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

}  // namespace

std::size_t k_invariant(const IntMatrix& a) {
  require_square(a, "k_invariant");
  require_nonnegative(a, "k_invariant");
  F2Matrix b = mod2_reduce(a);
  for (std::size_t i = 0; i < b.rows(); ++i) b.set(i, i, !b.get(i, i));
  return f2_kernel_dim(b);
}

bool is_irreducible(const IntMatrix& a) {
  require_square(a, "is_irreducible");
  for (bool s : reach_from_zero(a, false))
    if (!s) return false;
  for (bool s : reach_from_zero(a, true))
    if (!s) return false;
  return true;
}

bool is_permutation(const IntMatrix& a) {
  require_square(a, "is_permutation");
  const std::size_t n = a.rows();
  std::vector<int> col_ones(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    int row_ones = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t e = a(r, c);
      if (e == 1) {
        ++row_ones;
        ++col_ones[c];
      } else if (e != 0) {
        return false;
      }
    }
    if (row_ones != 1) return false;
  }
  for (int c : col_ones)
    if (c != 1) return false;
  return true;
}

MatrixInvariantReport invariant_report(const IntMatrix& a) {
  require_square(a, "invariant_report");
  require_nonnegative(a, "invariant_report");
  const IntMatrix i_minus_a = identity_minus(a);
  MatrixInvariantReport r;
  r.k = k_invariant(a);
  r.irreducible = is_irreducible(a);
  r.permutation = is_permutation(a);
  r.parry_sullivan = det_abs(i_minus_a);
  r.bowen_franks = smith_normal_form(i_minus_a).invariant_factors;

  std::size_t even = 0;
  for (const BigInt& d : r.bowen_franks)
    if ((d & 1) == 0) ++even;
  if (even != r.k) {
    throw std::logic_error("invariant_report: k disagrees with the even Bowen-Franks factors");
  }
  return r;
}

}  // namespace lyagraph
