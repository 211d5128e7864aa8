#include <doctest.h>

#include <cmath>

#include "alef/baselines.hpp"
#include "alef/walk.hpp"
#include "support/test_util.hpp"

using namespace alef;
using namespace alef::testing;

TEST_CASE("in-degree baseline divides citation counts by total edges") {
  const CitationGraph graph = make_graph({{"A", "B"}, {"C", "B"}, {"C", "A"}});
  const ScoreVector scores = in_degree_rank(graph);
  CHECK(scores.values[0] == 1.0 / 3.0);  // A
  CHECK(scores.values[1] == 2.0 / 3.0);  // B
  CHECK(scores.values[2] == 0.0);        // C
  CHECK(scores.coverage == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("in-degree baseline on an empty graph is all zero") {
  const CitationGraph graph = make_graph({}, {"A"});
  const ScoreVector scores = in_degree_rank(graph);
  CHECK(scores.values == std::vector<double>{0.0});
  CHECK(scores.coverage == 0.0);
}

TEST_CASE("in-degree baseline on a star concentrates on the hub") {
  const CitationGraph graph = make_graph(
      {{"l1", "hub"}, {"l2", "hub"}, {"l3", "hub"}, {"l4", "hub"}, {"l5", "hub"}});
  const ScoreVector scores = in_degree_rank(graph);
  const NodeId hub = *graph.paper_ids().find("hub");
  CHECK(scores.values[hub] == 1.0);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    if (i != hub) CHECK(scores.values[i] == 0.0);
  }
  CHECK(scores.coverage == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("in-degree scores sum to one") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const CitationGraph graph = random_digraph(seed);
    if (graph.edge_count() == 0) continue;
    // The rational identity behind the float sum: in-degrees add up to |E|.
    std::size_t in_sum = 0;
    for (NodeId i = 0; i < graph.node_count(); ++i) in_sum += graph.in_degree(i);
    CHECK(in_sum == graph.edge_count());

    const ScoreVector scores = in_degree_rank(graph);
    double sum = 0.0;
    for (double v : scores.values) sum += v;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("default walk coverage dominates in-degree coverage") {
  for (std::uint64_t seed = 230; seed < 250; ++seed) {
    const CitationGraph graph = random_digraph(seed);
    const ScoreVector walk = alef_closed_form(graph, WalkConfig{});
    const ScoreVector base = in_degree_rank(graph);
    CHECK(walk.coverage >= base.coverage);
    bool source_only = false;  // nodes that cite but are never cited
    for (NodeId i = 0; i < graph.node_count(); ++i) {
      source_only |= graph.out_degree(i) > 0 && graph.in_degree(i) == 0;
    }
    if (source_only) CHECK(walk.coverage > base.coverage);
  }
}
