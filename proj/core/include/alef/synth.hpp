#pragma once

#include <cstdint>

#include "alef/corpus.hpp"
#include "alef/evaluate.hpp"
#include "alef/scores.hpp"

namespace alef {

struct SynthConfig {
  std::uint64_t paper_count = 0;        // >= 2
  double mean_out_degree = 2.0;         // > 0, < paper_count
  double preferential_exponent = 1.0;   // 0 = uniform, 1 = linear
  std::uint64_t author_count = 0;       // 0 disables authorship
  double mean_authors_per_paper = 0.0;
  std::uint64_t seed = 0;
};

struct SynthCorpus {
  CitationGraph graph;
  AuthorshipMap authorship;
};

// Time-ordered citation DAG: paper t cites distinct earlier papers, drawn
// with probability proportional to (in_degree + 1)^exponent as of time t.
// Reference counts come from a Binomial(round(2*mean), 1/2) draw capped
// at t, so generation uses no transcendental sampling and is bit
// reproducible. Papers are named "0".."N-1" and authors "a0".."aM-1".
// Citation and authorship draws use separate (seed, index) streams, so
// author settings never perturb the edge list.
SynthCorpus generate_corpus(const SynthConfig& config);

// Samples pairs of nodes with distinct oracle scores, orders each by the
// oracle, then flips it independently with probability `noise`. Requires
// the oracle to hold at least two distinct positive scores.
JudgmentSet generate_judgments(const CitationGraph& graph, const ScoreVector& oracle,
                               std::uint64_t pair_count, double noise,
                               std::uint64_t seed);

}  // namespace alef
