#include <random>

#include <gtest/gtest.h>

#include "lyagraph/graph.hpp"
#include "support.hpp"

using namespace lyagraph;
using testing_support::dsl;
using testing_support::to_arcs;

TEST(VertexLabel, Factories) {
  EXPECT_EQ(VertexLabel::singularity(2).singularity_index(), 2);
  EXPECT_THROW(VertexLabel::singularity(4), std::invalid_argument);
  EXPECT_THROW(VertexLabel::singularity(-1), std::invalid_argument);
  EXPECT_TRUE(VertexLabel::attracting_orbit().is_attracting());
  EXPECT_TRUE(VertexLabel::repelling_orbit().is_repelling());
  EXPECT_FALSE(VertexLabel::repelling_orbit().singularity_index());
  EXPECT_THROW(VertexLabel::sft(IntMatrix{{1, 2}}), std::invalid_argument);
  EXPECT_THROW(VertexLabel::sft(IntMatrix()), std::invalid_argument);
  EXPECT_THROW(VertexLabel::sft(IntMatrix{{-1}}), std::invalid_argument);
  EXPECT_THROW(VertexLabel::singularity(0).matrix(), std::logic_error);
}

TEST(VertexLabel, ReversalIsAnInvolution) {
  const VertexLabel labels[] = {VertexLabel::singularity(0), VertexLabel::singularity(1),
                                VertexLabel::singularity(2), VertexLabel::singularity(3),
                                VertexLabel::attracting_orbit(), VertexLabel::repelling_orbit(),
                                VertexLabel::sft(IntMatrix{{1, 2}, {0, 1}})};
  for (const auto& l : labels) EXPECT_EQ(l.reversed().reversed(), l);
  EXPECT_EQ(VertexLabel::singularity(1).reversed(), VertexLabel::singularity(2));
  EXPECT_EQ(VertexLabel::attracting_orbit().reversed(), VertexLabel::repelling_orbit());
  EXPECT_EQ(VertexLabel::sft(IntMatrix{{1, 2}, {0, 1}}).reversed().matrix(),
            (IntMatrix{{1, 0}, {2, 1}}));
}

TEST(VertexLabel, ToString) {
  EXPECT_EQ(to_string(VertexLabel::singularity(3)), "sing 3");
  EXPECT_EQ(to_string(VertexLabel::attracting_orbit()), "orbit attracting");
  EXPECT_EQ(to_string(VertexLabel::sft(IntMatrix{{1, 1}, {1, 0}})), "sft 2x2 [1,1,1,0]");
}

TEST(LyapunovGraph, ConstructorInvariants) {
  const auto s = VertexLabel::singularity(0);
  EXPECT_THROW(LyapunovGraph({{"a", s}, {"a", s}}, {}), std::invalid_argument);
  EXPECT_THROW(LyapunovGraph({{"a", s}}, {{0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(LyapunovGraph({{"a", s}, {"b", s}}, {{0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(LyapunovGraph({{"a", s}, {"b", s}}, {{0, 1, -1}}), std::invalid_argument);
  const LyapunovGraph g({{"a", s}, {"b", s}}, {{0, 1, 2}});
  EXPECT_EQ(g.index_of("b"), 1u);
  EXPECT_FALSE(g.find("c"));
  EXPECT_THROW(g.index_of("c"), std::out_of_range);
}

TEST(Structure, TreeAndCycleRank) {
  const auto g = dsl("vertex a sing 3\nvertex b sing 0\nedge a -> b g=0\n");
  const auto r = validate_structure(g);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(cycle_rank(g), 0u);

  const auto h = dsl(
      "vertex r orbit repelling\nvertex v sft 1x1 [1]\nvertex w sft 1x1 [1]\nvertex a orbit attracting\n"
      "edge r -> v g=1\nedge v -> w g=1\nedge v -> w g=1\nedge w -> a g=1\n");
  EXPECT_EQ(cycle_rank(h), 1u);
}

TEST(Structure, ReportsDisconnection) {
  const auto g = dsl("vertex a sing 0\nvertex b sing 0\n");
  const auto r = validate_structure(g);
  EXPECT_FALSE(r.connected);
  EXPECT_TRUE(r.oriented_acyclic);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_THROW(cycle_rank(g), std::domain_error);
}

TEST(Structure, ReportsOrientedCycle) {
  const auto g = dsl(
      "vertex a sft 1x1 [2]\nvertex b sft 1x1 [2]\nvertex c sing 0\n"
      "edge a -> b g=0\nedge b -> a g=0\nedge b -> c g=0\n");
  const auto r = validate_structure(g);
  EXPECT_TRUE(r.connected);
  EXPECT_FALSE(r.oriented_acyclic);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_NE(r.violations[0].find("a"), std::string::npos);
}

TEST(Structure, EmptyGraph) {
  const auto r = validate_structure(LyapunovGraph());
  EXPECT_FALSE(r.nonempty);
  EXPECT_FALSE(r.valid());
}

TEST(Structure, AgreesWithSearchOracles) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = testing_support::wild_graph(rng, 6, 8);
    const auto r = validate_structure(g);
    const auto arcs = to_arcs(g);
    EXPECT_EQ(r.connected, oracle::connected(arcs)) << trial;
    EXPECT_EQ(is_connected(g), oracle::connected(arcs)) << trial;
    EXPECT_EQ(r.oriented_acyclic, !oracle::has_oriented_cycle(arcs)) << trial;
  }
}

TEST(DegreeProfile, CountsEdgesAndWeights) {
  const auto g = dsl(
      "vertex r orbit repelling\nvertex v sft 1x1 [1]\nvertex w sft 1x1 [1]\nvertex a orbit attracting\n"
      "edge r -> v g=2\nedge v -> w g=1\nedge v -> w g=3\nedge w -> a g=0\n");
  const auto p = degree_profile(g, "v");
  EXPECT_EQ(p.e_plus, 1u);
  EXPECT_EQ(p.e_minus, 2u);
  EXPECT_EQ(p.g_plus, 2);
  EXPECT_EQ(p.g_minus, 4);
  EXPECT_EQ(p.g_minus_list, (std::vector<std::int64_t>{1, 3}));
  const auto all = degree_profiles(g);
  ASSERT_EQ(all.size(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(all[v], degree_profile(g, v));
  EXPECT_THROW(degree_profile(g, "zz"), std::out_of_range);
}

TEST(Reverse, SwapsDirectionsAndLabels) {
  const auto g = dsl("vertex a sing 3\nvertex b sft 2x2 [1,2,0,1]\nedge a -> b g=4\n");
  const auto r = reverse(g);
  EXPECT_EQ(r.label(0), VertexLabel::singularity(0));
  EXPECT_EQ(r.label(1).matrix(), (IntMatrix{{1, 0}, {2, 1}}));
  EXPECT_EQ(r.edges()[0].src, 1u);
  EXPECT_EQ(r.edges()[0].dst, 0u);
  EXPECT_EQ(r.edges()[0].weight, 4);
}

TEST(Reverse, InvolutionSwapsDegrees) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testing_support::wild_graph(rng, 6, 8);
    const auto r = reverse(g);
    EXPECT_EQ(reverse(r), g);
    EXPECT_EQ(validate_structure(r).valid(), validate_structure(g).valid());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto a = degree_profile(g, v), b = degree_profile(r, v);
      EXPECT_EQ(a.e_plus, b.e_minus);
      EXPECT_EQ(a.g_plus, b.g_minus);
    }
  }
}
