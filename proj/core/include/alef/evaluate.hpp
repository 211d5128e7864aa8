#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>

#include "alef/corpus.hpp"
#include "alef/scores.hpp"

namespace alef {

// One expert comparison: `preferred` was judged more important than
// `other`.
struct JudgedPair {
  NodeId preferred;
  NodeId other;
  friend bool operator==(const JudgedPair&, const JudgedPair&) = default;
};

struct JudgmentSet {
  std::vector<JudgedPair> pairs;
  // Pairs dropped while loading because an id was unknown (or the two ids
  // were equal). Real judgment files reference a superset corpus, so
  // these are counted rather than fatal.
  std::uint64_t excluded_pairs = 0;
};

struct EvalReport {
  double performance = 0.0;  // agree / (agree + disagree + tie)
  double coverage = 0.0;
  double uniqueness = 0.0;
  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
  std::uint64_t tie = 0;
  std::uint64_t excluded_pairs = 0;
};

// judgments.tsv: "preferred_id<TAB>other_id", '#' comments.
JudgmentSet load_judgments(const std::filesystem::path& path,
                           const StringInterner& ids, Strictness strictness);

void write_judgments(const std::filesystem::path& path, const StringInterner& ids,
                     const JudgmentSet& judgments);

// A pair agrees when score(preferred) > score(other). Equal scores —
// including the both-zero case — are ties and count as failures.
// Throws ConfigError on an empty judgment set.
EvalReport pairwise_performance(const ScoreVector& scores,
                                const JudgmentSet& judgments);

// coverage  = positively scored nodes / all nodes
// uniqueness = distinct positive values / positively scored nodes
// (0 when nothing is scored).
std::pair<double, double> coverage_and_uniqueness(const ScoreVector& scores);

// Spearman rank correlation over all nodes with average-rank tie
// handling. nullopt when either vector is degenerate (all values equal,
// or fewer than two nodes).
std::optional<double> spearman_correlation(const ScoreVector& a,
                                           const ScoreVector& b);

}  // namespace alef
