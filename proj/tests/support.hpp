#pragma once

#include <random>
#include <string_view>

#include "lyagraph/graph.hpp"
#include "lyagraph/io.hpp"
#include "lyagraph/linalg.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Mat to_oracle(const lyagraph::IntMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

inline lyagraph::IntMatrix from_oracle(const oracle::Mat& m) {
  std::vector<std::int64_t> flat;
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return lyagraph::IntMatrix(m.size(), m.empty() ? 0 : m[0].size(), std::move(flat));
}

inline lyagraph::BigInt to_big(oracle::Wide v) {
  const bool neg = v < 0;
  if (neg) v = -v;
  lyagraph::BigInt out = 0;
  lyagraph::BigInt place = 1;
  while (v != 0) {
    out += place * static_cast<int>(v % 10);
    place *= 10;
    v /= 10;
  }
  return neg ? lyagraph::BigInt(-out) : out;
}

inline oracle::Arcs to_arcs(const lyagraph::LyapunovGraph& g) {
  oracle::Arcs a{g.vertex_count(), {}};
  for (const auto& e : g.edges()) a.arcs.emplace_back(e.src, e.dst);
  return a;
}

inline oracle::PlainGraph to_plain(const lyagraph::LyapunovGraph& g) {
  oracle::PlainGraph p;
  for (const auto& v : g.vertices()) {
    oracle::PlainVertex x;
    if (auto r = v.label.singularity_index()) {
      x.kind = oracle::Kind::Sing;
      x.index = *r;
    } else if (v.label.is_attracting()) {
      x.kind = oracle::Kind::Attracting;
    } else if (v.label.is_repelling()) {
      x.kind = oracle::Kind::Repelling;
    } else {
      x.kind = oracle::Kind::Sft;
      x.matrix = to_oracle(v.label.matrix());
    }
    p.vertices.push_back(std::move(x));
  }
  for (const auto& e : g.edges()) p.edges.push_back({e.src, e.dst, e.weight});
  return p;
}

inline lyagraph::LyapunovGraph dsl(std::string_view text) { return lyagraph::parse_dsl(text).graph; }

/// Arbitrary (possibly cyclic or disconnected) graph for structural checks.
inline lyagraph::LyapunovGraph wild_graph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_e) {
  using namespace lyagraph;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) {
    const int r = std::uniform_int_distribution<int>(0, 5)(rng);
    VertexLabel label = r < 4    ? VertexLabel::singularity(r)
                        : r == 4 ? VertexLabel::attracting_orbit()
                                 : VertexLabel::sft(IntMatrix{{1, 1}, {1, 0}});
    vs.push_back(Vertex{"n" + std::to_string(i), label});
  }
  std::vector<Edge> es;
  if (n > 1) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_e)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) b = (b + 1) % n;
      es.push_back(Edge{a, b, std::uniform_int_distribution<std::int64_t>(0, 2)(rng)});
    }
  }
  return LyapunovGraph(std::move(vs), std::move(es));
}

}  // namespace testing_support
