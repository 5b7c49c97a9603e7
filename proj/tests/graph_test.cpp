#include <gtest/gtest.h>

#include <vector>

#include "htg/errors.hpp"
#include "htg/graph.hpp"
#include "htg/htg.hpp"
#include "htg/named_graphs.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace htg {
namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Errc build_error(int order, std::vector<Edge> edges) {
  try {
    build_graph(order, edges);
  } catch (const HtgError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::BadParameter;
}

TEST(BuildGraph, PathOnTwoVertices) {
  const std::vector<Edge> edges{{0, 1}};
  const Graph g = build_graph(2, edges);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(BuildGraph, K33DegreeSequence) {
  const Graph g = named(NamedKind::K33);
  ASSERT_EQ(g.order(), 6);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_EQ(build_error(4, {{0, 0}}), Errc::SelfLoop);
  EXPECT_EQ(build_error(4, {{0, 1}, {1, 0}}), Errc::DuplicateEdge);
  EXPECT_EQ(build_error(4, {{0, 4}}), Errc::IndexOutOfRange);
  EXPECT_EQ(build_error(4, {{-1, 2}}), Errc::IndexOutOfRange);
}

TEST(BuildGraph, AdjacencySymmetricAndSorted) {
  for (const HtgParams& p : testing::all_valid_triples(60)) {
    const Graph g = build_htg(p).graph();
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) EXPECT_TRUE(g.has_edge(w, v));
    }
  }
}

TEST(Girth, SmallExamples) {
  EXPECT_EQ(girth(named(NamedKind::K33)), 4);
  EXPECT_EQ(girth(named(NamedKind::Heawood)), 6);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_EQ(girth(build_graph(3, path)), std::nullopt);
  EXPECT_EQ(girth(cycle_graph(7)), 7);
}

TEST(Girth, AgreesWithCycleEnumeration) {
  std::vector<Graph> corpus{named(NamedKind::K33),   named(NamedKind::Cube),
                            named(NamedKind::Heawood), named(NamedKind::MoebiusKantor),
                            named(NamedKind::Prism, 5), named(NamedKind::MoebiusLadder, 4),
                            named(NamedKind::Wreath, 4), named(NamedKind::GeneralizedPrism, 3),
                            cycle_graph(9)};
  for (const HtgParams& p : testing::all_valid_triples(16)) {
    corpus.push_back(build_htg(p).graph());
  }
  for (const Graph& g : corpus) {
    ASSERT_LE(g.order(), 16);
    EXPECT_EQ(girth(g), oracle::brute_girth(g));
  }
}

TEST(StructuralProfile, Examples) {
  const Graph pappus_htg = build_htg(validate_params(3, 6, 3)).graph();
  EXPECT_EQ(structural_profile(pappus_htg), (StructuralProfile{true, true, true}));

  const std::vector<Edge> single{{0, 1}};
  EXPECT_EQ(structural_profile(build_graph(2, single)), (StructuralProfile{false, true, true}));

  const std::vector<Edge> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_EQ(structural_profile(build_graph(6, triangles)),
            (StructuralProfile{false, false, false}));
}

TEST(CyclesThroughEdge, Examples) {
  const Graph heawood = named(NamedKind::Heawood);
  for (const Edge& e : heawood.edges()) EXPECT_EQ(cycles_through_edge(heawood, e, 6), 8u);
  const Graph k33 = named(NamedKind::K33);
  for (const Edge& e : k33.edges()) EXPECT_EQ(cycles_through_edge(k33, e, 4), 4u);
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(cycles_through_edge(c6, Edge(0, 1), 6), 1u);
  EXPECT_EQ(cycles_through_edge(c6, Edge(0, 1), 4), 0u);
}

TEST(CyclesThroughEdge, AgreesWithPathCount) {
  const std::vector<Graph> corpus{named(NamedKind::Heawood), named(NamedKind::Pappus),
                                  named(NamedKind::MoebiusKantor), named(NamedKind::Cube),
                                  build_htg(validate_params(2, 8, 0)).graph()};
  for (const Graph& g : corpus) {
    for (const Edge& e : g.edges()) {
      for (int length : {4, 6, 8}) {
        EXPECT_EQ(cycles_through_edge(g, e, length), oracle::brute_cycles_through_edge(g, e, length));
      }
    }
  }
}

TEST(CyclesThroughEdge, Errors) {
  const Graph k33 = named(NamedKind::K33);
  try {
    cycles_through_edge(k33, Edge(0, 1), 4);
    FAIL();
  } catch (const HtgError& e) {
    EXPECT_EQ(e.code(), Errc::NotAnEdge);
  }
  EXPECT_THROW(cycles_through_edge(k33, Edge(0, 3), 13), HtgError);
  EXPECT_THROW(cycles_through_edge(k33, Edge(0, 3), 2), HtgError);
}

TEST(CyclesThroughEdge, GenericSixCyclesInGirthSix) {
  for (const HtgParams& p : testing::all_valid_triples(120)) {
    const Graph g = build_htg(p).graph();
    if (girth(g) != 6) continue;
    for (const Edge& e : g.edges()) {
      EXPECT_GE(cycles_through_edge(g, e, 6), 2u) << p.to_string();
    }
  }
}

}  // namespace
}  // namespace htg
