#pragma once

#include <cstddef>
#include <vector>

#include "lyagraph/linalg.hpp"

namespace lyagraph {

/// Invariants of the matrix labelling a suspended subshift.
struct MatrixInvariantReport {
  std::size_t k = 0;
  bool irreducible = false;
  bool permutation = false;
  BigInt parry_sullivan;             // |det(I - A)|
  std::vector<BigInt> bowen_franks;  // invariant factors of I - A

  friend bool operator==(const MatrixInvariantReport&, const MatrixInvariantReport&) = default;
};

/// dim ker(I - B) over F2, with B = A mod 2. Throws std::invalid_argument for
/// non-square input or negative entries.
std::size_t k_invariant(const IntMatrix& a);

/// Strong connectivity of the digraph with an arc i -> j whenever a(i,j) > 0.
bool is_irreducible(const IntMatrix& a);

bool is_permutation(const IntMatrix& a);

MatrixInvariantReport invariant_report(const IntMatrix& a);

}  // namespace lyagraph
