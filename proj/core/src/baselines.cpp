#include "alef/baselines.hpp"

namespace alef {

ScoreVector in_degree_rank(const CitationGraph& graph) {
  const std::size_t n = graph.node_count();
  ScoreVector result;
  result.values.assign(n, 0.0);
  if (graph.edge_count() > 0) {
    const double e = static_cast<double>(graph.edge_count());
    for (NodeId i = 0; i < n; ++i) {
      result.values[i] = static_cast<double>(graph.in_degree(i)) / e;
    }
  }
  result.recompute_coverage();
  return result;
}

}  // namespace alef
