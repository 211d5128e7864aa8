#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "alef/blend.hpp"
#include "alef/error.hpp"
#include "alef/rng.hpp"
#include "support/test_util.hpp"

using namespace alef;
using namespace alef::testing;

namespace {

ScoreVector scores_of(std::vector<double> values) {
  ScoreVector sv;
  sv.values = std::move(values);
  sv.recompute_coverage();
  return sv;
}

AuthorScoreTable pa_of(std::vector<std::optional<double>> pa) {
  AuthorScoreTable table;
  table.pa = std::move(pa);
  return table;
}

}  // namespace

TEST_CASE("blend takes the weighted average when both scores exist") {
  const ScoreVector citation = scores_of({0.3});
  const AuthorScoreTable table = pa_of({0.4});
  const ScoreVector blended = blend_scores(citation, table, BlendConfig{});
  CHECK(blended.values[0] == 0.7 * 0.3 + 0.3 * 0.4);
  CHECK(std::abs(blended.values[0] - 0.33) <= 1e-15);
}

TEST_CASE("blend falls back to PA when the citation score is zero") {
  const ScoreVector citation = scores_of({0.0});
  const AuthorScoreTable table = pa_of({0.4});
  const ScoreVector blended = blend_scores(citation, table, BlendConfig{});
  CHECK(blended.values[0] == 0.4);
}

TEST_CASE("blend falls back to the citation score without PA") {
  const ScoreVector citation = scores_of({0.25, 0.0});
  const AuthorScoreTable table = pa_of({std::nullopt, std::nullopt});
  const ScoreVector blended = blend_scores(citation, table, BlendConfig{});
  CHECK(blended.values[0] == 0.25);
  CHECK(blended.values[1] == 0.0);
}

TEST_CASE("weights (1,0) reproduce the citation vector bit for bit") {
  const ScoreVector citation = scores_of({0.3, 0.0, 0.125, 0.77});
  const AuthorScoreTable table = pa_of({0.4, 0.5, std::nullopt, 0.1});
  BlendConfig config;
  config.alef_weight = 1.0;
  config.author_weight = 0.0;
  const ScoreVector blended = blend_scores(citation, table, config);
  // Papers with a positive citation score keep it exactly; zero-scored
  // papers still fall back to PA.
  CHECK(blended.values[0] == citation.values[0]);
  CHECK(blended.values[2] == citation.values[2]);
  CHECK(blended.values[3] == citation.values[3]);
  CHECK(blended.values[1] == 0.5);

  const AuthorScoreTable empty;
  const ScoreVector pure = blend_scores(citation, empty, config);
  CHECK(pure.values == citation.values);
}

TEST_CASE("blended values stay between the two inputs") {
  SplitMix64 rng = SplitMix64::stream(600, 0);
  for (int round = 0; round < 200; ++round) {
    const double c = 0.01 + rng.next_unit();
    const double pa = 0.01 + rng.next_unit();
    const double w = rng.next_unit();
    BlendConfig config;
    config.alef_weight = w;
    config.author_weight = 1.0 - w;
    const ScoreVector blended =
        blend_scores(scores_of({c}), pa_of({pa}), config);
    CHECK(blended.values[0] >= std::min(c, pa) - 1e-15);
    CHECK(blended.values[0] <= std::max(c, pa) + 1e-15);
  }
}

TEST_CASE("weight invariant violations are configuration errors") {
  BlendConfig bad;
  bad.alef_weight = 0.7;
  bad.author_weight = 0.4;
  CHECK_THROWS_AS(blend_scores(scores_of({0.1}), {}, bad), ConfigError);
  bad.alef_weight = -0.1;
  bad.author_weight = 1.1;
  CHECK_THROWS_AS(blend_scores(scores_of({0.1}), {}, bad), ConfigError);
}

TEST_CASE("mismatched PA table size is rejected") {
  CHECK_THROWS_AS(blend_scores(scores_of({0.1, 0.2}), pa_of({0.3}), BlendConfig{}),
                  ConfigError);
}

TEST_CASE("randomized fill draws below the smallest ranked score") {
  const ScoreVector sv = scores_of({0.5, 0.2, 0.0, 0.0});
  const ScoreVector filled = randomize_unranked(sv, 77);
  CHECK(filled.values[0] == 0.5);
  CHECK(filled.values[1] == 0.2);
  for (std::size_t i : {std::size_t{2}, std::size_t{3}}) {
    CHECK(filled.values[i] > 0.0);
    CHECK(filled.values[i] < 0.999 * 0.2);
  }
  CHECK(filled.coverage == 1.0);
}

TEST_CASE("randomized fill is a no-op on an all-zero vector") {
  const ScoreVector sv = scores_of({0.0, 0.0});
  const ScoreVector filled = randomize_unranked(sv, 1);
  CHECK(filled.values == sv.values);
}

TEST_CASE("randomized fill reproduces exactly for a fixed seed") {
  SplitMix64 rng = SplitMix64::stream(700, 0);
  ScoreVector sv;
  sv.values.resize(500);
  for (auto& v : sv.values) v = rng.next_unit() < 0.5 ? 0.0 : rng.next_unit();
  const ScoreVector a = randomize_unranked(sv, 42);
  const ScoreVector b = randomize_unranked(sv, 42);
  CHECK(a.values == b.values);
  const ScoreVector c = randomize_unranked(sv, 43);
  CHECK(a.values != c.values);
}

TEST_CASE("randomized fill keeps every original positive order") {
  SplitMix64 rng = SplitMix64::stream(701, 0);
  ScoreVector sv;
  sv.values.resize(300);
  for (auto& v : sv.values) v = rng.next_unit() < 0.4 ? 0.0 : rng.next_unit();
  const ScoreVector filled = randomize_unranked(sv, 9);
  double max_fill = 0.0, min_orig = 1e300;
  for (std::size_t i = 0; i < sv.values.size(); ++i) {
    if (sv.values[i] > 0.0) {
      CHECK(filled.values[i] == sv.values[i]);
      min_orig = std::min(min_orig, sv.values[i]);
    } else {
      max_fill = std::max(max_fill, filled.values[i]);
    }
  }
  CHECK(max_fill < min_orig);
}

TEST_CASE("unit normalization maps the maximum to one and keeps order") {
  ScoreVector sv = scores_of({0.5, 0.2, 0.0, 0.1});
  normalize_to_unit(sv);
  CHECK(sv.values[0] == 1.0);
  CHECK(sv.values[1] == doctest::Approx(0.4));
  CHECK(sv.values[2] == 0.0);
  CHECK(sv.values[1] > sv.values[3]);
  CHECK(sv.coverage == 0.75);

  ScoreVector zeros = scores_of({0.0, 0.0});
  normalize_to_unit(zeros);
  CHECK(zeros.values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("a single-point sweep equals direct evaluation") {
  const ScoreVector citation = scores_of({0.3, 0.5, 0.2, 0.0});
  JudgmentSet set;
  set.pairs = {{1, 0}, {0, 2}, {3, 2}};
  const std::vector<std::pair<double, double>> grid{{1.0, 0.0}};
  const SweepReport sweep = weight_sweep(citation, {}, set, grid);
  const EvalReport direct = pairwise_performance(citation, set);
  REQUIRE(sweep.points.size() == 1);
  CHECK(sweep.points[0].report.performance == direct.performance);
  CHECK(sweep.points[0].report.agree == direct.agree);
  CHECK(sweep.best_index == 0);
}

TEST_CASE("sweep reports every grid point and the argmax") {
  SplitMix64 rng = SplitMix64::stream(800, 0);
  const std::size_t n = 100;
  ScoreVector citation;
  citation.values.resize(n);
  AuthorScoreTable table;
  table.pa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    citation.values[i] = rng.next_unit() < 0.3 ? 0.0 : rng.next_unit();
    table.pa[i] = rng.next_unit() < 0.5
                      ? std::optional<double>(rng.next_unit())
                      : std::nullopt;
  }
  citation.recompute_coverage();
  JudgmentSet set;
  while (set.pairs.size() < 500) {
    const NodeId i = static_cast<NodeId>(rng.next_below(n));
    const NodeId j = static_cast<NodeId>(rng.next_below(n));
    if (i == j) continue;
    set.pairs.push_back({i, j});
  }
  const std::vector<std::pair<double, double>> grid{{0.7, 0.3}, {0.5, 0.5}, {0.3, 0.7}};
  const SweepReport sweep = weight_sweep(citation, table, set, grid);
  REQUIRE(sweep.points.size() == 3);
  for (const auto& point : sweep.points) {
    CHECK(point.report.agree + point.report.disagree + point.report.tie ==
          set.pairs.size());
  }
  for (const auto& point : sweep.points) {
    CHECK(sweep.points[sweep.best_index].report.performance >=
          point.report.performance);
  }
}

TEST_CASE("an empty PA table makes every weight pair equivalent") {
  const ScoreVector citation = scores_of({0.3, 0.5, 0.2, 0.0});
  JudgmentSet set;
  set.pairs = {{1, 0}, {0, 2}, {1, 2}};
  const std::vector<std::pair<double, double>> grid{{0.7, 0.3}, {1.0, 0.0}};
  const SweepReport sweep = weight_sweep(citation, {}, set, grid);
  CHECK(sweep.points[0].report.performance == sweep.points[1].report.performance);
}

TEST_CASE("an empty grid is rejected") {
  JudgmentSet set;
  set.pairs = {{0, 1}};
  CHECK_THROWS_AS(weight_sweep(scores_of({0.1, 0.2}), {}, set, {}), ConfigError);
}
