#include "lyagraph/enumerate.hpp"

#include <cstdlib>
#include <limits>
#include <random>

#include <fmt/format.h>

namespace lyagraph {

BudgetExceeded::BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
    : std::runtime_error(fmt::format(
          "enumeration bounds admit {} candidate graphs, above the safety budget of {}",
          candidates == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                   : std::to_string(candidates),
          budget)),
      candidates_(candidates),
      budget_(budget) {}

std::vector<IntMatrix> default_matrix_pool() {
  return {IntMatrix{{1}}, IntMatrix{{2}}, IntMatrix{{1, 1}, {1, 1}}, IntMatrix{{1, 0}, {0, 1}}};
}

std::vector<VertexLabel> default_label_pool(std::span<const IntMatrix> matrices) {
  std::vector<VertexLabel> pool;
  for (int r = 0; r <= 3; ++r) pool.push_back(VertexLabel::singularity(r));
  pool.push_back(VertexLabel::attracting_orbit());
  pool.push_back(VertexLabel::repelling_orbit());
  for (const auto& m : matrices) pool.push_back(VertexLabel::sft(m));
  return pool;
}

std::vector<VertexLabel> default_label_pool() {
  const auto matrices = default_matrix_pool();
  return default_label_pool(matrices);
}

void validate_bounds(const EnumerationBounds& b) {
  if (b.max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
  if (b.max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
  if (b.max_parallel_edges < 1) throw std::invalid_argument("max_parallel_edges must be at least 1");
  if (b.label_pool.empty()) throw std::invalid_argument("label_pool must not be empty");
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Number of non-decreasing m-tuples over {0..w}: C(w+m, m).
std::uint64_t multisets(std::uint64_t w, std::uint64_t m) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t next = sat_mul(c, w + i);
    if (next == kSaturated) return kSaturated;
    c = next / i;
  }
  return c;
}

void nondecreasing_tuples(std::int64_t max_weight, std::size_t m, std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  const std::int64_t lo = cur.empty() ? 0 : cur.back();
  for (std::int64_t w = lo; w <= max_weight; ++w) {
    cur.push_back(w);
    nondecreasing_tuples(max_weight, m, cur, out);
    cur.pop_back();
  }
}

bool skeleton_connected(std::size_t n, const std::vector<std::size_t>& mult,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::size_t comps = n;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (mult[p] == 0) continue;
    const std::size_t a = root(pairs[p].first), b = root(pairs[p].second);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

std::uint64_t candidate_count(const EnumerationBounds& b) {
  std::uint64_t per_pair = 0;
  for (std::size_t m = 0; m <= b.max_parallel_edges; ++m) {
    per_pair = sat_add(per_pair, multisets(static_cast<std::uint64_t>(b.max_weight), m));
  }
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= b.max_vertices; ++n) {
    std::uint64_t c = 1;
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::size_t p = 0; p < pairs && c != kSaturated; ++p) c = sat_mul(c, per_pair);
    for (std::size_t v = 0; v < n && c != kSaturated; ++v) c = sat_mul(c, b.label_pool.size());
    total = sat_add(total, c);
  }
  return total;
}

std::uint64_t budget_from_environment() {
  if (const char* env = std::getenv("LYAGRAPH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

// ---------------------------------------------------------------------------

GraphEnumerator::GraphEnumerator(EnumerationBounds bounds, std::uint64_t budget)
    : bounds_(std::move(bounds)) {
  validate_bounds(bounds_);
  const std::uint64_t candidates = candidate_count(bounds_);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);

  weight_tuples_.resize(bounds_.max_parallel_edges + 1);
  for (std::size_t m = 1; m <= bounds_.max_parallel_edges; ++m) {
    std::vector<std::int64_t> cur;
    nondecreasing_tuples(bounds_.max_weight, m, cur, weight_tuples_[m]);
  }
  for (std::size_t i = 1; i <= bounds_.max_vertices; ++i) ids_.push_back(fmt::format("v{}", i));

  for (std::size_t n = 1; n <= bounds_.max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> mult(pairs.size(), 0);
    for (;;) {
      if (skeleton_connected(n, mult, pairs)) {
        Skeleton s;
        s.vertices = n;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          if (mult[p] > 0) s.groups.push_back({pairs[p].first, pairs[p].second, mult[p]});
        }
        skeletons_.push_back(std::move(s));
      }
      // Odometer over multiplicities, last pair fastest.
      std::size_t p = pairs.size();
      while (p > 0 && mult[p - 1] == bounds_.max_parallel_edges) mult[--p] = 0;
      if (p == 0) break;
      ++mult[p - 1];
    }
  }
}

void GraphEnumerator::expand(std::size_t s,
                             const std::function<void(const LyapunovGraph&)>& visit) const {
  const Skeleton& sk = skeletons_.at(s);
  const std::size_t n = sk.vertices;
  const std::size_t groups = sk.groups.size();
  const std::size_t pool = bounds_.label_pool.size();

  std::vector<std::size_t> weight_idx(groups, 0);
  std::vector<Edge> edges;
  for (;;) {
    edges.clear();
    for (std::size_t gi = 0; gi < groups; ++gi) {
      const auto& grp = sk.groups[gi];
      for (std::int64_t w : weight_tuples_[grp.multiplicity][weight_idx[gi]]) {
        edges.push_back(Edge{grp.src, grp.dst, w});
      }
    }

    std::vector<std::size_t> label_idx(n, 0);
    for (;;) {
      std::vector<Vertex> vs;
      vs.reserve(n);
      for (std::size_t v = 0; v < n; ++v) vs.push_back(Vertex{ids_[v], bounds_.label_pool[label_idx[v]]});
      visit(LyapunovGraph(std::move(vs), edges));

      std::size_t v = n;
      while (v > 0 && label_idx[v - 1] + 1 == pool) label_idx[--v] = 0;
      if (v == 0) break;
      ++label_idx[v - 1];
    }

    std::size_t gi = groups;
    while (gi > 0 && weight_idx[gi - 1] + 1 == weight_tuples_[sk.groups[gi - 1].multiplicity].size()) {
      weight_idx[--gi] = 0;
    }
    if (gi == 0) break;
    ++weight_idx[gi - 1];
  }
}

void GraphEnumerator::for_each(const std::function<void(const LyapunovGraph&)>& visit) const {
  for (std::size_t s = 0; s < skeletons_.size(); ++s) expand(s, visit);
}

void enumerate_graphs(const EnumerationBounds& b,
                      const std::function<void(const LyapunovGraph&)>& visit,
                      std::uint64_t budget) {
  GraphEnumerator(b, budget).for_each(visit);
}

std::vector<LyapunovGraph> collect_graphs(const EnumerationBounds& b, std::uint64_t budget) {
  std::vector<LyapunovGraph> out;
  enumerate_graphs(b, [&](const LyapunovGraph& g) { out.push_back(g); }, budget);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Uniform draw in [0, n) by rejection on raw mt19937_64 output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

LyapunovGraph random_graph(std::uint64_t seed, const EnumerationBounds& b) {
  validate_bounds(b);
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + draw(rng, b.max_vertices);

  // order[i] is the vertex placed at topological position i (Fisher-Yates).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);

  // mult[a][b] for topological positions a < b.
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n, 0));
  for (std::size_t pos = 1; pos < n; ++pos) mult[draw(rng, pos)][pos] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      if (draw(rng, 3) != 0) continue;
      const std::size_t room = b.max_parallel_edges - mult[a][c];
      mult[a][c] += draw(rng, room + 1);
    }
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      for (std::size_t k = 0; k < mult[a][c]; ++k) {
        const auto w = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(b.max_weight) + 1));
        edges.push_back(Edge{order[a], order[c], w});
      }
    }
  }
  std::vector<Vertex> vs;
  vs.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    vs.push_back(Vertex{fmt::format("v{}", v + 1), b.label_pool[draw(rng, b.label_pool.size())]});
  }
  return LyapunovGraph(std::move(vs), std::move(edges));
}

RealizableCount count_realizable(const EnumerationBounds& b, Target t,
                                 const EnumerationOptions& opts) {
  const GraphEnumerator en(b, opts.budget);
  return fold_graphs(
      en, RealizableCount{},
      [t](RealizableCount& acc, const LyapunovGraph& g) {
        ++acc.total;
        if (check(g, t, ReportDetail::Summary).realizable) ++acc.realizable;
      },
      [](RealizableCount& acc, RealizableCount&& part) {
        acc.total += part.total;
        acc.realizable += part.realizable;
      },
      opts.workers);
}

}  // namespace lyagraph
