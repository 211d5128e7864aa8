#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alef/corpus.hpp"

namespace alef {

// Dense per-node non-negative score; the interchange currency between
// modules. `coverage` is the fraction of nodes with a positive score and
// is refreshed by every operation that returns a ScoreVector.
struct ScoreVector {
  std::vector<double> values;
  double coverage = 0.0;

  std::size_t positive_count() const;
  void recompute_coverage();
};

// A score vector together with the string ids its indices refer to, as
// read back from a scores.tsv file.
struct NamedScores {
  StringInterner ids;
  ScoreVector scores;
};

// Formats a score with 17 significant digits (lossless for binary64).
std::string format_score(double value);

// scores.tsv: one "paper_string_id<TAB>score" line per node, in node-id
// order, zero scores included. Header '#' lines record the metadata
// key/value pairs (never timestamps, so equal runs emit equal bytes).
void write_scores(const std::filesystem::path& path, const StringInterner& ids,
                  const ScoreVector& scores,
                  std::span<const std::pair<std::string, std::string>> metadata);

NamedScores read_scores(const std::filesystem::path& path);

}  // namespace alef
