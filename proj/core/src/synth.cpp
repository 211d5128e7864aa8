#include "alef/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "alef/error.hpp"
#include "alef/rng.hpp"

namespace alef {

namespace {

// Prefix-sum tree over positive weights; supports O(log n) point updates
// and sampling an index from the weight distribution.
class FenwickSampler {
 public:
  explicit FenwickSampler(std::size_t n) : tree_(n + 1, 0.0), size_(n) {}

  void add(std::size_t i, double delta) {
    for (std::size_t j = i + 1; j <= size_; j += j & (~j + 1)) tree_[j] += delta;
    total_ += delta;
  }

  double total() const { return total_; }

  // Largest-index descent: returns the smallest i with prefix_sum(i) > x.
  std::size_t sample(double x) const {
    std::size_t idx = 0;
    std::size_t bit = std::bit_floor(size_);
    for (; bit != 0; bit >>= 1) {
      const std::size_t next = idx + bit;
      if (next <= size_ && tree_[next] <= x) {
        x -= tree_[next];
        idx = next;
      }
    }
    return idx;  // may equal size_-1 at the weight boundary
  }

 private:
  std::vector<double> tree_;
  std::size_t size_ = 0;
  double total_ = 0.0;
};

// Binomial(flips, 1/2) via popcount: mean flips/2, no libm involved.
std::uint64_t coin_flip_count(SplitMix64& rng, std::uint64_t flips) {
  std::uint64_t count = 0;
  while (flips >= 64) {
    count += std::popcount(rng.next());
    flips -= 64;
  }
  if (flips > 0) {
    count += std::popcount(rng.next() & ((std::uint64_t{1} << flips) - 1));
  }
  return count;
}

double attachment_weight(std::uint64_t in_degree, double exponent) {
  return std::pow(static_cast<double>(in_degree + 1), exponent);
}

}  // namespace

SynthCorpus generate_corpus(const SynthConfig& config) {
  if (config.paper_count < 2) {
    throw ConfigError("paper_count must be >= 2");
  }
  if (!(config.mean_out_degree > 0.0) ||
      config.mean_out_degree >= static_cast<double>(config.paper_count)) {
    throw ConfigError("mean_out_degree must be positive and below paper_count");
  }
  if (config.preferential_exponent < 0.0) {
    throw ConfigError("preferential_exponent must be non-negative");
  }
  if (config.mean_authors_per_paper > 0.0 && config.author_count == 0) {
    throw ConfigError("mean_authors_per_paper requires author_count > 0");
  }

  const std::size_t n = config.paper_count;
  const std::uint64_t flips =
      std::max<std::uint64_t>(1, std::llround(2.0 * config.mean_out_degree));

  SplitMix64 cite_rng = SplitMix64::stream(config.seed, 0);
  FenwickSampler weights(n);
  std::vector<std::uint64_t> in_degree(n, 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(config.mean_out_degree * n));

  weights.add(0, attachment_weight(0, config.preferential_exponent));
  std::vector<NodeId> chosen;
  for (std::size_t t = 1; t < n; ++t) {
    const std::uint64_t refs =
        std::min<std::uint64_t>(coin_flip_count(cite_rng, flips), t);
    chosen.clear();
    while (chosen.size() < refs) {
      const double x = cite_rng.next_unit() * weights.total();
      const NodeId v = static_cast<NodeId>(std::min(weights.sample(x), t - 1));
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      chosen.push_back(v);
      edges.push_back(Edge{static_cast<NodeId>(t), v});
    }
    // Weight updates apply after the paper's draws, so every reference of
    // paper t sees the in-degrees as of time t.
    for (NodeId v : chosen) {
      const double old_w = attachment_weight(in_degree[v], config.preferential_exponent);
      ++in_degree[v];
      weights.add(v, attachment_weight(in_degree[v], config.preferential_exponent) - old_w);
    }
    weights.add(t, attachment_weight(0, config.preferential_exponent));
  }

  StringInterner paper_ids;
  for (std::size_t i = 0; i < n; ++i) paper_ids.intern(std::to_string(i));

  SynthCorpus corpus{CitationGraph(std::move(paper_ids), std::move(edges)), {}};

  if (config.author_count > 0 && config.mean_authors_per_paper > 0.0) {
    SplitMix64 author_rng = SplitMix64::stream(config.seed, 1);
    const std::uint64_t author_flips =
        std::max<std::uint64_t>(1, std::llround(2.0 * config.mean_authors_per_paper));
    StringInterner author_ids;
    for (std::uint64_t a = 0; a < config.author_count; ++a) {
      author_ids.intern("a" + std::to_string(a));
    }
    std::vector<std::pair<NodeId, AuthorId>> pairs;
    std::vector<AuthorId> paper_authors;
    for (std::size_t p = 0; p < n; ++p) {
      const std::uint64_t count = std::min<std::uint64_t>(
          coin_flip_count(author_rng, author_flips), config.author_count);
      paper_authors.clear();
      while (paper_authors.size() < count) {
        // u^2 skews popularity toward low author indices.
        const double u = author_rng.next_unit();
        const AuthorId a = static_cast<AuthorId>(std::min<std::uint64_t>(
            static_cast<std::uint64_t>(u * u * static_cast<double>(config.author_count)),
            config.author_count - 1));
        if (std::find(paper_authors.begin(), paper_authors.end(), a) !=
            paper_authors.end()) {
          continue;
        }
        paper_authors.push_back(a);
        pairs.emplace_back(static_cast<NodeId>(p), a);
      }
    }
    corpus.authorship = AuthorshipMap(std::move(author_ids), n, pairs);
  } else {
    corpus.authorship = AuthorshipMap(StringInterner{}, n, {});
  }
  return corpus;
}

JudgmentSet generate_judgments(const CitationGraph& graph, const ScoreVector& oracle,
                               std::uint64_t pair_count, double noise,
                               std::uint64_t seed) {
  if (oracle.values.size() != graph.node_count()) {
    throw ConfigError("oracle does not cover the graph");
  }
  if (noise < 0.0 || noise > 1.0) {
    throw ConfigError("noise must lie in [0, 1]");
  }
  std::unordered_set<double> distinct_positive;
  for (double v : oracle.values) {
    if (v > 0.0) distinct_positive.insert(v);
    if (distinct_positive.size() >= 2) break;
  }
  if (distinct_positive.size() < 2) {
    throw ConfigError("oracle needs at least two distinct positive scores");
  }

  const std::size_t n = graph.node_count();
  // Stream 2 of the seed; corpus generation holds streams 0 and 1, so one
  // seed can drive a whole synthetic benchmark without replaying draws.
  SplitMix64 rng = SplitMix64::stream(seed, 2);
  JudgmentSet set;
  set.pairs.reserve(pair_count);
  while (set.pairs.size() < pair_count) {
    const NodeId i = static_cast<NodeId>(rng.next_below(n));
    const NodeId j = static_cast<NodeId>(rng.next_below(n));
    if (oracle.values[i] == oracle.values[j]) continue;
    NodeId preferred = oracle.values[i] > oracle.values[j] ? i : j;
    NodeId other = preferred == i ? j : i;
    if (rng.next_unit() < noise) std::swap(preferred, other);
    set.pairs.push_back(JudgedPair{preferred, other});
  }
  return set;
}

}  // namespace alef
