#pragma once

// Slow reference computations over plain std types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;
using Wide = __int128;

inline Mat random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> d(0, max_entry);
  Mat a(n, std::vector<std::int64_t>(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

inline Mat identity_minus(const Mat& a) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? 1 : 0) - a[i][j];
  }
  return m;
}

/// Number of x in F2^m with (I - A) x = 0, by trying every x.
inline std::uint64_t kernel_vectors_mod2(const Mat& a) {
  const std::size_t m = a.size();
  const Mat b = identity_minus(a);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    bool zero = true;
    for (std::size_t i = 0; i < m && zero; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < m; ++j)
        if ((x >> j) & 1U) s += b[i][j];
      zero = (s % 2) == 0;
    }
    count += zero ? 1 : 0;
  }
  return count;
}

inline std::size_t exact_log2(std::uint64_t v) {
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < v) ++k;
  return (std::uint64_t{1} << k) == v ? k : static_cast<std::size_t>(-1);
}

/// Rank over F2 of the rows of a 0/1 matrix: log2 of the size of the span,
/// built by closing the span under addition of each row.
inline std::size_t span_rank_mod2(const Mat& a) {
  std::set<std::vector<int>> span{std::vector<int>(a.empty() ? 0 : a[0].size(), 0)};
  for (const auto& row : a) {
    std::set<std::vector<int>> next = span;
    for (auto v : span) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + static_cast<int>(row[j] & 1)) % 2;
      next.insert(v);
    }
    span = std::move(next);
  }
  return exact_log2(span.size());
}

/// Laplace expansion along the first row.
inline Wide cofactor_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Wide det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    const Wide term = static_cast<Wide>(a[0][c]) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
/// minors and d_k = D_k / D_{k-1}. Zero once D_k vanishes.
inline std::vector<Wide> invariant_factors(const Mat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Wide> out;
  Wide prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    Wide d = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Mat m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        d = wide_gcd(d, cofactor_det(m));
      }
    }
    if (d == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
    } else {
      out.push_back(d / prev);
      prev = d;
    }
  }
  return out;
}

/// Cycles of a permutation matrix, or -1 when a is not a permutation matrix.
inline int permutation_cycles(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> image(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 1) {
        if (image[i] != n) return -1;
        image[i] = j;
      } else if (a[i][j] != 0) {
        return -1;
      }
    }
    if (image[i] == n) return -1;
  }
  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return -1;
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = image[j]) seen[j] = true;
  }
  return cycles;
}

/// Plain adjacency description of a multigraph for the structural oracles.
struct Arcs {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

inline bool connected(const Arcs& g) {
  if (g.n == 0) return false;
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.arcs) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x == v && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

/// Depth-first search with colours; true when some oriented cycle exists.
inline bool has_oriented_cycle(const Arcs& g) {
  std::vector<int> colour(g.n, 0);
  auto visit = [&](auto&& self, std::size_t v) -> bool {
    colour[v] = 1;
    for (auto [a, b] : g.arcs) {
      if (a != v) continue;
      if (colour[b] == 1) return true;
      if (colour[b] == 0 && self(self, b)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < g.n; ++v)
    if (colour[v] == 0 && visit(visit, v)) return true;
  return false;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Graphs on vertices 1..n whose edges run from lower to higher position,
/// with at most `parallel` edges per pair, weights 0..w as a multiset per
/// pair, and `labels` choices per vertex. Counted by walking every
/// multiplicity vector and testing connectivity directly.
inline std::uint64_t canonical_graph_count(std::size_t max_n, std::int64_t w, std::size_t parallel,
                                           std::size_t labels) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t configs = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) configs *= parallel + 1;
    std::uint64_t label_ways = 1;
    for (std::size_t v = 0; v < n; ++v) label_ways *= labels;
    for (std::uint64_t code = 0; code < configs; ++code) {
      Arcs g{n, {}};
      std::uint64_t weight_ways = 1;
      std::uint64_t c = code;
      for (auto [i, j] : pairs) {
        const std::size_t m = c % (parallel + 1);
        c /= parallel + 1;
        for (std::size_t e = 0; e < m; ++e) g.arcs.emplace_back(i, j);
        weight_ways *= binomial(static_cast<std::uint64_t>(w) + m, m);
      }
      if (connected(g)) total += weight_ways * label_ways;
    }
  }
  return total;
}

enum class Kind { Sing, Attracting, Repelling, Sft };

struct PlainVertex {
  Kind kind = Kind::Sing;
  int index = 0;
  Mat matrix;
};

struct PlainEdge {
  std::size_t src;
  std::size_t dst;
  std::int64_t g;
};

struct PlainGraph {
  std::vector<PlainVertex> vertices;
  std::vector<PlainEdge> edges;
};

inline Arcs arcs_of(const PlainGraph& g) {
  Arcs a{g.vertices.size(), {}};
  for (const auto& e : g.edges) a.arcs.emplace_back(e.src, e.dst);
  return a;
}

/// Realizability read straight off the statement of the conditions.
/// s3 selects the three-sphere, otherwise S2 x S1.
inline bool realizable(const PlainGraph& g, bool s3) {
  const Arcs arcs = arcs_of(g);
  if (!connected(arcs) || has_oriented_cycle(arcs)) return false;
  const std::int64_t beta =
      static_cast<std::int64_t>(g.edges.size()) - static_cast<std::int64_t>(g.vertices.size()) + 1;
  if (s3 && beta != 0) return false;
  if (!s3 && beta >= 2) return false;

  int eq_vertices = 0;
  bool any_weight = false;
  for (const auto& e : g.edges) any_weight = any_weight || e.g > 0;

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::int64_t in = 0, out = 0, gin = 0, gout = 0;
    for (const auto& e : g.edges) {
      if (e.dst == v) {
        ++in;
        gin += e.g;
      }
      if (e.src == v) {
        ++out;
        gout += e.g;
      }
    }
    const PlainVertex& x = g.vertices[v];
    const bool sink = (x.kind == Kind::Sing && x.index == 0) || x.kind == Kind::Attracting;
    const bool source = (x.kind == Kind::Sing && x.index == 3) || x.kind == Kind::Repelling;
    if (sink && !(in == 1 && out == 0)) return false;
    if (source && !(in == 0 && out == 1)) return false;
    if (!sink && !source && (in == 0 || out == 0)) return false;
    if (x.kind == Kind::Sing && x.index == 2 && !(in >= 1 && in <= 2 && out == 1)) return false;
    if (x.kind == Kind::Sing && x.index == 1 && !(in == 1 && out >= 1 && out <= 2)) return false;
    const std::int64_t chi = x.kind == Kind::Sing ? (x.index % 2 == 0 ? 1 : -1) : 0;
    if (chi != in - out - gin + gout) return false;
    if (x.kind == Kind::Sft) {
      const auto k = static_cast<std::int64_t>(exact_log2(kernel_vectors_mod2(x.matrix)));
      const bool ineq = k + 1 - gout <= in && in <= k + 1 && k + 1 - gin <= out && out <= k + 1;
      const bool eq = k - gout == in && k - gin == out;
      if (s3 || beta == 1) {
        if (!ineq) return false;
      } else {
        if (!ineq && !eq) return false;
        if (eq) ++eq_vertices;
      }
    }
  }
  if (!s3 && beta == 0) {
    if (eq_vertices > 1) return false;
    if (eq_vertices == 0 && !any_weight) return false;
  }
  return true;
}

}  // namespace oracle
