#include "alef/walk.hpp"

#include <algorithm>
#include <vector>

#include "alef/error.hpp"
#include "alef/parallel.hpp"
#include "alef/rng.hpp"

namespace alef {

namespace {

void validate(const WalkConfig& config, bool monte_carlo) {
  if (config.steps_between_teleports < 1) {
    throw ConfigError("steps_between_teleports must be >= 1");
  }
  if (monte_carlo && config.sample_count < 1) {
    throw ConfigError("sample_count must be >= 1 for Monte Carlo");
  }
}

}  // namespace

ScoreVector alef_closed_form(const CitationGraph& graph, const WalkConfig& config) {
  validate(config, false);
  const std::size_t n = graph.node_count();
  ScoreVector result;
  result.values.assign(n, 0.0);
  if (graph.edge_count() == 0) {
    result.recompute_coverage();
    return result;
  }

  const double inv_2e = 1.0 / (2.0 * static_cast<double>(graph.edge_count()));
  std::vector<double> mass(n);     // walker distribution after t steps
  std::vector<double> arrivals(n); // expected arrivals per node
  std::vector<double> scaled(n);   // mass[u] / out_degree(u)
  std::vector<double> next(n);

  parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      mass[i] = static_cast<double>(graph.out_degree(static_cast<NodeId>(i)) +
                                    graph.in_degree(static_cast<NodeId>(i))) *
                inv_2e;
      arrivals[i] = config.count_landing_arrival ? mass[i] : 0.0;
    }
  });

  for (std::uint32_t step = 0; step < config.steps_between_teleports; ++step) {
    parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const std::size_t out = graph.out_degree(static_cast<NodeId>(i));
        scaled[i] = out == 0 ? 0.0 : mass[i] / static_cast<double>(out);
      }
    });
    parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const NodeId v = static_cast<NodeId>(i);
        double sum = 0.0;  // in-neighbor order is fixed by the reverse CSR
        for (NodeId u : graph.cited_by(v)) sum += scaled[u];
        if (config.dangling == DanglingPolicy::self_arrival &&
            graph.out_degree(v) == 0) {
          sum += mass[i];
        }
        next[i] = sum;
        arrivals[i] += sum;
      }
    });
    mass.swap(next);

    // Sum of non-negatives is zero iff all entries are zero, so this
    // early exit is order-independent and cannot change the result.
    double remaining = 0.0;
    for (double m : mass) remaining += m;
    if (remaining == 0.0) break;
  }

  double total = 0.0;  // always serial, in node-index order
  for (double a : arrivals) total += a;
  if (total > 0.0) {
    parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) result.values[i] = arrivals[i] / total;
    });
  }
  result.recompute_coverage();
  return result;
}

ScoreVector alef_monte_carlo(const CitationGraph& graph, const WalkConfig& config) {
  validate(config, true);
  const std::size_t n = graph.node_count();
  ScoreVector result;
  result.values.assign(n, 0.0);
  if (graph.edge_count() == 0) {
    result.recompute_coverage();
    return result;
  }

  const unsigned workers = std::max(1u, config.threads);
  std::vector<std::vector<std::uint64_t>> histograms(
      workers, std::vector<std::uint64_t>(n, 0));

  parallel_for(workers, workers, [&](std::size_t wbegin, std::size_t wend) {
    for (std::size_t w = wbegin; w < wend; ++w) {
      const std::uint64_t trials =
          config.sample_count / workers + (w < config.sample_count % workers ? 1 : 0);
      SplitMix64 rng = SplitMix64::stream(config.seed, w);
      std::vector<std::uint64_t>& hist = histograms[w];
      for (std::uint64_t t = 0; t < trials; ++t) {
        const Edge& e = graph.edge(rng.next_below(graph.edge_count()));
        NodeId cur = (rng.next() & 1) ? e.citing : e.cited;
        if (config.count_landing_arrival) ++hist[cur];
        for (std::uint32_t step = 0; step < config.steps_between_teleports; ++step) {
          const std::size_t out = graph.out_degree(cur);
          if (out == 0) {
            if (config.dangling == DanglingPolicy::self_arrival) {
              hist[cur] += config.steps_between_teleports - step;
            }
            break;
          }
          cur = graph.cites(cur)[rng.next_below(out)];
          ++hist[cur];
        }
      }
    }
  });

  // Integer merge: associative, so the totals are identical for any join
  // order; worker partitioning alone defines the result.
  std::uint64_t total = 0;
  std::vector<std::uint64_t> merged(n, 0);
  for (const auto& hist : histograms) {
    for (std::size_t i = 0; i < n; ++i) merged[i] += hist[i];
  }
  for (std::uint64_t c : merged) total += c;

  if (total > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      result.values[i] =
          static_cast<double>(merged[i]) / static_cast<double>(total);
    }
  }
  result.recompute_coverage();
  return result;
}

ScoreVector alef_rank(const CitationGraph& graph, const WalkConfig& config) {
  return alef_closed_form(graph, config);
}

}  // namespace alef
