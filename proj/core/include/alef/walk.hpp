#pragma once

#include <cstdint>

#include "alef/corpus.hpp"
#include "alef/scores.hpp"

namespace alef {

// What happens when the walker sits on a node with no outgoing citations.
//   halt:         the walk ends; the remaining steps score nothing.
//   self_arrival: each remaining step credits one arrival to the node.
enum class DanglingPolicy { halt, self_arrival };

struct WalkConfig {
  std::uint32_t steps_between_teleports = 1;  // k >= 1
  bool count_landing_arrival = true;
  DanglingPolicy dangling = DanglingPolicy::halt;
  std::uint64_t seed = 0;          // Monte Carlo only
  std::uint64_t sample_count = 0;  // Monte Carlo only, >= 1
  unsigned threads = 1;
};

// Exact arrival-frequency distribution of the teleport-to-link walk,
// normalized to sum 1. One trial of the walk:
//   1. Pick one of the |E| edges uniformly and land on either endpoint
//      with probability 1/2 (an arrival, if count_landing_arrival).
//   2. Take up to k directed steps, each to a uniformly random cited
//      neighbor, each an arrival at the destination; dangling nodes are
//      handled per DanglingPolicy.
// Computed by propagating the landing distribution through k sparse
// pull steps, so no sampling or fixed-point iteration is involved. Every
// per-node sum runs in a fixed order regardless of thread count, making
// parallel output bit-identical to serial. Edge-free graphs score all
// zeros.
ScoreVector alef_closed_form(const CitationGraph& graph, const WalkConfig& config);

// Seeded simulation of the same process, the verification oracle for the
// closed form. Trials are split across `threads` workers, each drawing
// from an independent stream of (seed, worker_index); the merged integer
// histogram is identical for a fixed (seed, threads) and bit-identical
// run to run.
ScoreVector alef_monte_carlo(const CitationGraph& graph, const WalkConfig& config);

// Public entry point: closed form plus coverage.
ScoreVector alef_rank(const CitationGraph& graph, const WalkConfig& config);

}  // namespace alef
