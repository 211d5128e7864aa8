#include <doctest.h>

#include <cmath>

#include "alef/error.hpp"
#include "alef/evaluate.hpp"
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

JudgmentSet pairs_of(std::vector<JudgedPair> pairs) {
  JudgmentSet set;
  set.pairs = std::move(pairs);
  return set;
}

}  // namespace

TEST_CASE("a correctly ordered pair counts as agreement") {
  const ScoreVector sv = scores_of({0.3, 0.5});
  const EvalReport report = pairwise_performance(sv, pairs_of({{1, 0}}));
  CHECK(report.agree == 1);
  CHECK(report.performance == 1.0);
}

TEST_CASE("equal scores tie and ties count as failures") {
  const ScoreVector sv = scores_of({0.0, 0.0, 0.5});
  const EvalReport report =
      pairwise_performance(sv, pairs_of({{0, 1}, {2, 0}, {1, 2}}));
  CHECK(report.tie == 1);       // the zero-zero pair
  CHECK(report.agree == 1);     // 0.5 > 0
  CHECK(report.disagree == 1);  // 0 < 0.5
  CHECK(report.performance == doctest::Approx(1.0 / 3.0));
  CHECK(report.agree + report.disagree + report.tie == 3);
}

TEST_CASE("uniform random scores against random pairs sit near one half") {
  const std::size_t n = 2000;
  SplitMix64 rng = SplitMix64::stream(31337, 0);
  ScoreVector sv;
  sv.values.resize(n);
  for (auto& v : sv.values) v = rng.next_unit();
  JudgmentSet set;
  while (set.pairs.size() < 10000) {
    const NodeId i = static_cast<NodeId>(rng.next_below(n));
    const NodeId j = static_cast<NodeId>(rng.next_below(n));
    if (i == j) continue;
    set.pairs.push_back({i, j});
  }
  const EvalReport report = pairwise_performance(sv, set);
  CHECK(report.performance > 0.48);
  CHECK(report.performance < 0.52);
}

TEST_CASE("empty judgment sets are rejected") {
  const ScoreVector sv = scores_of({0.1});
  CHECK_THROWS_AS(pairwise_performance(sv, JudgmentSet{}), ConfigError);
}

TEST_CASE("coverage and uniqueness on the worked example") {
  auto [coverage, uniqueness] = coverage_and_uniqueness(scores_of({0.3, 0.5, 0.2}));
  CHECK(coverage == 1.0);
  CHECK(uniqueness == 1.0);
}

TEST_CASE("coverage and uniqueness with repeated and zero values") {
  auto [coverage, uniqueness] = coverage_and_uniqueness(scores_of({0.5, 0.5, 0.0}));
  CHECK(coverage == doctest::Approx(2.0 / 3.0));
  CHECK(uniqueness == doctest::Approx(0.5));
}

TEST_CASE("coverage and uniqueness of an all-zero vector") {
  auto [coverage, uniqueness] = coverage_and_uniqueness(scores_of({0.0, 0.0}));
  CHECK(coverage == 0.0);
  CHECK(uniqueness == 0.0);
}

TEST_CASE("spearman of a vector with itself is one") {
  const ScoreVector a = scores_of({0.1, 0.7, 0.3, 0.9, 0.5});
  CHECK(spearman_correlation(a, a) == doctest::Approx(1.0));
}

TEST_CASE("spearman against the reversal is minus one") {
  const ScoreVector a = scores_of({0.1, 0.7, 0.3, 0.9, 0.5});
  const ScoreVector b = scores_of({0.9, 0.3, 0.7, 0.1, 0.5});
  CHECK(spearman_correlation(a, b) == doctest::Approx(-1.0));
}

TEST_CASE("spearman matches reference values with ties") {
  // Frozen from scipy.stats.spearmanr on the same inputs.
  ScoreVector a = scores_of({0.1, 0.4, 0.4, 0.0, 0.9, 0.2, 0.4, 0.0});
  ScoreVector b = scores_of({1.0, 3.0, 2.0, 0.5, 8.0, 1.5, 2.5, 0.25});
  CHECK(*spearman_correlation(a, b) == doctest::Approx(0.9697815168769668).epsilon(1e-12));

  ScoreVector c = scores_of({3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0});
  ScoreVector d = scores_of({2.0, 7.0, 1.0, 8.0, 2.0, 8.0, 1.0, 8.0});
  CHECK(*spearman_correlation(c, d) == doctest::Approx(0.19885368120992467).epsilon(1e-12));
}

TEST_CASE("degenerate vectors have no spearman value") {
  const ScoreVector flat = scores_of({0.5, 0.5, 0.5});
  const ScoreVector varied = scores_of({0.1, 0.2, 0.3});
  CHECK_FALSE(spearman_correlation(flat, varied).has_value());
  CHECK_FALSE(spearman_correlation(varied, flat).has_value());
  const ScoreVector single = scores_of({1.0});
  CHECK_FALSE(spearman_correlation(single, single).has_value());
  CHECK_THROWS_AS(spearman_correlation(varied, scores_of({0.1})), ConfigError);
}

TEST_CASE("forward plus reversed performance never exceeds one") {
  for (std::uint64_t seed = 400; seed < 410; ++seed) {
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    const std::size_t n = 50;
    ScoreVector sv;
    sv.values.resize(n);
    for (auto& v : sv.values) v = rng.next_unit() < 0.3 ? 0.0 : rng.next_unit();
    JudgmentSet forward, reversed;
    for (int p = 0; p < 500; ++p) {
      const NodeId i = static_cast<NodeId>(rng.next_below(n));
      const NodeId j = static_cast<NodeId>(rng.next_below(n));
      if (i == j) continue;
      forward.pairs.push_back({i, j});
      reversed.pairs.push_back({j, i});
    }
    const EvalReport f = pairwise_performance(sv, forward);
    const EvalReport r = pairwise_performance(sv, reversed);
    CHECK(f.performance + r.performance <= 1.0 + 1e-12);
    if (f.tie == 0) {
      CHECK(f.performance + r.performance == doctest::Approx(1.0));
    }
    CHECK(f.agree + f.disagree + f.tie == forward.pairs.size());
  }
}

TEST_CASE("strictly increasing transforms change nothing") {
  SplitMix64 rng = SplitMix64::stream(500, 0);
  const std::size_t n = 60;
  ScoreVector sv, transformed, other;
  sv.values.resize(n);
  other.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sv.values[i] = rng.next_unit() < 0.25 ? 0.0 : rng.next_unit();
    other.values[i] = rng.next_unit();
  }
  transformed.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    transformed.values[i] = 2.0 * sv.values[i] + (sv.values[i] > 0 ? 1.0 : 0.0);
  }
  transformed.recompute_coverage();
  sv.recompute_coverage();

  JudgmentSet set;
  for (int p = 0; p < 400; ++p) {
    const NodeId i = static_cast<NodeId>(rng.next_below(n));
    const NodeId j = static_cast<NodeId>(rng.next_below(n));
    if (i == j) continue;
    set.pairs.push_back({i, j});
  }
  const EvalReport before = pairwise_performance(sv, set);
  const EvalReport after = pairwise_performance(transformed, set);
  CHECK(before.performance == after.performance);
  CHECK(before.coverage == after.coverage);
  CHECK(*spearman_correlation(sv, other) ==
        doctest::Approx(*spearman_correlation(transformed, other)).epsilon(1e-12));
}

TEST_CASE("judgment loading excludes unknown and self pairs with a count") {
  TempDir dir;
  const auto path = write_file(
      dir, "j.tsv", "# judged\nA\tB\nA\tA\nmissing\tB\nB\tC\nbroken-line\n");
  StringInterner ids;
  ids.intern("A");
  ids.intern("B");
  ids.intern("C");
  const JudgmentSet set = load_judgments(path, ids, Strictness::lenient);
  CHECK(set.pairs.size() == 2);
  CHECK(set.excluded_pairs == 3);  // self pair, unknown id, malformed line
  CHECK(set.pairs[0] == JudgedPair{0, 1});

  CHECK_THROWS_AS(load_judgments(path, ids, Strictness::strict), ParseError);
}

TEST_CASE("judgments round-trip through their file form") {
  TempDir dir;
  StringInterner ids;
  ids.intern("p0");
  ids.intern("p1");
  ids.intern("p2");
  JudgmentSet set;
  set.pairs = {{2, 0}, {0, 1}, {2, 1}};
  const auto path = dir.file("j.tsv");
  write_judgments(path, ids, set);
  const JudgmentSet reread = load_judgments(path, ids, Strictness::strict);
  CHECK(reread.pairs == set.pairs);
}
