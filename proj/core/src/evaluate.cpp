#include "alef/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "alef/error.hpp"
#include "tsv.hpp"

namespace alef {

JudgmentSet load_judgments(const std::filesystem::path& path,
                           const StringInterner& ids, Strictness strictness) {
  JudgmentSet set;
  set.excluded_pairs = 0;
  const std::uint64_t malformed = tsv::for_each_pair(
      path, strictness,
      [&](std::uint64_t, std::string_view preferred, std::string_view other) {
        const auto p = ids.find(preferred);
        const auto o = ids.find(other);
        if (!p || !o || *p == *o) {
          ++set.excluded_pairs;
          return;
        }
        set.pairs.push_back(JudgedPair{*p, *o});
      });
  set.excluded_pairs += malformed;
  return set;
}

void write_judgments(const std::filesystem::path& path, const StringInterner& ids,
                     const JudgmentSet& judgments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const JudgedPair& pair : judgments.pairs) {
    out << ids.name(pair.preferred) << '\t' << ids.name(pair.other) << '\n';
  }
  if (!out) throw IoError("write error on " + path.string());
}

EvalReport pairwise_performance(const ScoreVector& scores,
                                const JudgmentSet& judgments) {
  if (judgments.pairs.empty()) {
    throw ConfigError("judgment set is empty");
  }
  EvalReport report;
  report.excluded_pairs = judgments.excluded_pairs;
  for (const JudgedPair& pair : judgments.pairs) {
    const double p = scores.values[pair.preferred];
    const double o = scores.values[pair.other];
    if (p > o) {
      ++report.agree;
    } else if (p < o) {
      ++report.disagree;
    } else {
      ++report.tie;
    }
  }
  const std::uint64_t total = report.agree + report.disagree + report.tie;
  report.performance = static_cast<double>(report.agree) / static_cast<double>(total);
  const auto [coverage, uniqueness] = coverage_and_uniqueness(scores);
  report.coverage = coverage;
  report.uniqueness = uniqueness;
  return report;
}

std::pair<double, double> coverage_and_uniqueness(const ScoreVector& scores) {
  std::vector<double> positive;
  positive.reserve(scores.values.size());
  for (double v : scores.values) {
    if (v > 0.0) positive.push_back(v);
  }
  if (scores.values.empty() || positive.empty()) return {0.0, 0.0};
  const double coverage = static_cast<double>(positive.size()) /
                          static_cast<double>(scores.values.size());
  std::sort(positive.begin(), positive.end());
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < positive.size(); ++i) {
    distinct += positive[i] != positive[i - 1];
  }
  const double uniqueness =
      static_cast<double>(distinct) / static_cast<double>(positive.size());
  return {coverage, uniqueness};
}

namespace {

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> fractional_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman_correlation(const ScoreVector& a,
                                           const ScoreVector& b) {
  if (a.values.size() != b.values.size()) {
    throw ConfigError("spearman inputs must cover the same corpus");
  }
  const std::size_t n = a.values.size();
  if (n < 2) return std::nullopt;

  const std::vector<double> ra = fractional_ranks(a.values);
  const std::vector<double> rb = fractional_ranks(b.values);
  const double mean = 0.5 * static_cast<double>(n + 1);

  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
  return cov / std::sqrt(var_a * var_b);
}

}  // namespace alef
