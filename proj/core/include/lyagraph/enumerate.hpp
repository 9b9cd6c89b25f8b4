#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lyagraph/checker.hpp"
#include "lyagraph/graph.hpp"

namespace lyagraph {

struct EnumerationBounds {
  std::size_t max_vertices = 1;
  std::int64_t max_weight = 0;
  std::size_t max_parallel_edges = 1;
  std::vector<VertexLabel> label_pool;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Thrown when bounds would generate more candidates than the budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const { return candidates_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  std::size_t workers = 1;
};

/// {[1], [2], [[1,1],[1,1]], diag(1,1)}: k = 1, 0, 0, 2.
std::vector<IntMatrix> default_matrix_pool();

/// Singularities of index 0..3, attracting and repelling orbits, then one SFT
/// label per matrix.
std::vector<VertexLabel> default_label_pool(std::span<const IntMatrix> matrices);
std::vector<VertexLabel> default_label_pool();

/// Throws std::invalid_argument for unusable bounds.
void validate_bounds(const EnumerationBounds& b);

/// Upper bound on the number of graphs the enumeration visits (labelled
/// candidates before the connectivity filter). Saturates at UINT64_MAX.
std::uint64_t candidate_count(const EnumerationBounds& b);

/// LYAGRAPH_BUDGET when set to a positive integer, else kDefaultBudget.
std::uint64_t budget_from_environment();

/// Exhaustive enumerator. Vertices are named v1..vn and every edge runs from
/// a lower to a higher position, so declaration order is a topological order.
/// The sequence is ordered by vertex count, then edge multiplicities per
/// vertex pair, then weights, then labels; the last item varies fastest.
/// Parallel edges carry non-decreasing weights.
class GraphEnumerator {
 public:
  /// Validates bounds and rejects them up front when candidate_count exceeds
  /// the budget.
  explicit GraphEnumerator(EnumerationBounds bounds, std::uint64_t budget = kDefaultBudget);

  /// Connected edge skeletons in canonical order; each is a unit of work.
  std::size_t skeleton_count() const { return skeletons_.size(); }

  /// Visits every labelled, weighted graph built on skeleton s, in order.
  void expand(std::size_t s, const std::function<void(const LyapunovGraph&)>& visit) const;

  void for_each(const std::function<void(const LyapunovGraph&)>& visit) const;

  const EnumerationBounds& bounds() const { return bounds_; }

 private:
  struct Skeleton {
    std::size_t vertices = 0;
    // (src, dst, multiplicity) for each vertex pair with at least one edge.
    struct Group {
      std::size_t src;
      std::size_t dst;
      std::size_t multiplicity;
    };
    std::vector<Group> groups;
  };

  EnumerationBounds bounds_;
  std::vector<Skeleton> skeletons_;
  // weight_tuples_[m] = non-decreasing m-tuples over 0..max_weight, lexicographic.
  std::vector<std::vector<std::vector<std::int64_t>>> weight_tuples_;
  std::vector<std::string> ids_;
};

/// Folds f over every enumerated graph. Skeletons are distributed over
/// `workers` threads, one accumulator per skeleton, and the accumulators are
/// merged in skeleton order; the result is independent of the worker count
/// as long as merge is associative.
template <class Acc, class PerGraph, class Merge>
Acc fold_graphs(const GraphEnumerator& en, const Acc& init, PerGraph per_graph, Merge merge,
                std::size_t workers = 1) {
  const std::size_t n = en.skeleton_count();
  std::vector<Acc> partial(n, init);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t s = next++; s < n; s = next++) {
      Acc& acc = partial[s];
      en.expand(s, [&](const LyapunovGraph& g) { per_graph(acc, g); });
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  Acc out = init;
  for (Acc& p : partial) merge(out, std::move(p));
  return out;
}

void enumerate_graphs(const EnumerationBounds& b,
                      const std::function<void(const LyapunovGraph&)>& visit,
                      std::uint64_t budget = kDefaultBudget);

std::vector<LyapunovGraph> collect_graphs(const EnumerationBounds& b,
                                          std::uint64_t budget = kDefaultBudget);

/// Seeded sample from mt19937_64. Same (seed, bounds) gives the same graph on
/// every platform. The result is connected and free of oriented cycles.
LyapunovGraph random_graph(std::uint64_t seed, const EnumerationBounds& b);

struct RealizableCount {
  std::uint64_t total = 0;
  std::uint64_t realizable = 0;
  friend bool operator==(const RealizableCount&, const RealizableCount&) = default;
};

RealizableCount count_realizable(const EnumerationBounds& b, Target t,
                                 const EnumerationOptions& opts = {});

}  // namespace lyagraph
