#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alef/corpus.hpp"
#include "alef/scores.hpp"

namespace alef {

// Per-author (IA) and per-paper (PA) authorship scores. Undefined entries
// are absent, never zero, so blending can tell "no author signal" apart
// from a zero score.
struct AuthorScoreTable {
  std::vector<std::optional<double>> ia;  // indexed by AuthorId
  std::vector<std::optional<double>> pa;  // indexed by NodeId
};

// IA(a) = mean of the author's strictly positive paper scores; undefined
// when the author has none.
AuthorScoreTable individual_author_scores(const ScoreVector& paper_scores,
                                          const AuthorshipMap& authorship,
                                          unsigned threads = 1);

// PA(p) = mean of the defined IA values of p's authors; undefined when no
// author has a defined IA (in particular for papers with no authorship).
void paper_author_scores(AuthorScoreTable& table, const AuthorshipMap& authorship,
                         unsigned threads = 1);

// ia.tsv / pa.tsv: "id<TAB>score" for defined entries only, in id order.
void write_optional_scores(const std::filesystem::path& path,
                           const StringInterner& ids,
                           std::span<const std::optional<double>> values,
                           std::span<const std::pair<std::string, std::string>> metadata);

// Reads a defined-entries-only file back against a known id universe.
// Entries whose id is not in `universe` are skipped and counted.
std::vector<std::optional<double>> read_optional_scores(
    const std::filesystem::path& path, const StringInterner& universe,
    std::uint64_t* unresolved = nullptr);

}  // namespace alef
