#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "alef/author_scores.hpp"
#include "alef/evaluate.hpp"
#include "alef/scores.hpp"

namespace alef {

struct BlendConfig {
  double alef_weight = 0.7;
  double author_weight = 0.3;  // must sum to 1 with alef_weight
  bool randomize_unranked = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Per paper: weighted average when both the citation score and PA are
// available, whichever one exists otherwise, zero when neither does.
// "Available" means a positive citation score or a defined PA. An empty
// PA table (no authorship) reproduces the citation vector unchanged.
ScoreVector blend_scores(const ScoreVector& citation, const AuthorScoreTable& table,
                         const BlendConfig& config);

// Replaces every zero score with an independent uniform draw from
// [0, 0.999 * minval), where minval is the smallest positive score, so
// filled papers sort strictly below every ranked paper. Exact-zero draws
// are redrawn, making every filled score positive. Each paper draws from
// its own (seed, node) stream, so the result is independent of traversal
// order. No-op when no positive score exists (callers warn).
ScoreVector randomize_unranked(const ScoreVector& scores, std::uint64_t seed);

// Optional export transform: divides by the maximum score, mapping onto
// [0, 1] while preserving order and ratios. No-op on all-zero vectors.
void normalize_to_unit(ScoreVector& scores);

struct SweepPoint {
  double alef_weight = 0.0;
  double author_weight = 0.0;
  EvalReport report;
};

struct SweepReport {
  std::vector<SweepPoint> points;
  std::size_t best_index = 0;  // argmax performance, first on ties
};

// Evaluates pairwise performance for each weight pair of the grid.
// Throws ConfigError on an empty grid.
SweepReport weight_sweep(const ScoreVector& citation, const AuthorScoreTable& table,
                         const JudgmentSet& judgments,
                         std::span<const std::pair<double, double>> grid,
                         unsigned threads = 1);

}  // namespace alef
