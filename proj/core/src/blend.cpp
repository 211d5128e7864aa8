#include "alef/blend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alef/error.hpp"
#include "alef/parallel.hpp"
#include "alef/rng.hpp"

namespace alef {

namespace {

void validate_weights(double alef_weight, double author_weight) {
  if (!(alef_weight >= 0.0 && alef_weight <= 1.0) ||
      !(author_weight >= 0.0 && author_weight <= 1.0) ||
      std::abs(alef_weight + author_weight - 1.0) > 1e-12) {
    throw ConfigError("blend weights must lie in [0,1] and sum to 1");
  }
}

}  // namespace

ScoreVector blend_scores(const ScoreVector& citation, const AuthorScoreTable& table,
                         const BlendConfig& config) {
  validate_weights(config.alef_weight, config.author_weight);
  const std::size_t n = citation.values.size();
  if (!table.pa.empty() && table.pa.size() != n) {
    throw ConfigError("PA table does not cover the citation-score corpus");
  }
  ScoreVector result;
  result.values.assign(n, 0.0);
  parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const double c = citation.values[p];
      const std::optional<double> pa =
          table.pa.empty() ? std::nullopt : table.pa[p];
      if (c > 0.0 && pa) {
        result.values[p] = config.alef_weight * c + config.author_weight * *pa;
      } else if (c > 0.0) {
        result.values[p] = c;
      } else if (pa) {
        result.values[p] = *pa;
      }
    }
  });
  result.recompute_coverage();
  return result;
}

ScoreVector randomize_unranked(const ScoreVector& scores, std::uint64_t seed) {
  double minval = std::numeric_limits<double>::infinity();
  for (double v : scores.values) {
    if (v > 0.0 && v < minval) minval = v;
  }
  ScoreVector result = scores;
  if (!std::isfinite(minval)) {
    result.recompute_coverage();
    return result;  // nothing ranked; leave untouched
  }
  const double limit = 0.999 * minval;
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    if (result.values[i] == 0.0) {
      SplitMix64 rng = SplitMix64::stream(seed, i);
      double draw = rng.next_unit() * limit;
      while (draw == 0.0) draw = rng.next_unit() * limit;
      result.values[i] = draw;
    }
  }
  result.recompute_coverage();
  return result;
}

void normalize_to_unit(ScoreVector& scores) {
  double max = 0.0;
  for (double v : scores.values) max = std::max(max, v);
  if (max <= 0.0) return;
  for (double& v : scores.values) v /= max;
  scores.recompute_coverage();
}

SweepReport weight_sweep(const ScoreVector& citation, const AuthorScoreTable& table,
                         const JudgmentSet& judgments,
                         std::span<const std::pair<double, double>> grid,
                         unsigned threads) {
  if (grid.empty()) throw ConfigError("weight sweep grid is empty");
  SweepReport report;
  report.points.reserve(grid.size());
  for (const auto& [alef_weight, author_weight] : grid) {
    BlendConfig config;
    config.alef_weight = alef_weight;
    config.author_weight = author_weight;
    config.threads = threads;
    const ScoreVector blended = blend_scores(citation, table, config);
    SweepPoint point;
    point.alef_weight = alef_weight;
    point.author_weight = author_weight;
    point.report = pairwise_performance(blended, judgments);
    report.points.push_back(point);
  }
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    if (report.points[i].report.performance >
        report.points[report.best_index].report.performance) {
      report.best_index = i;
    }
  }
  return report;
}

}  // namespace alef
