#include "alef/author_scores.hpp"

#include <charconv>
#include <fstream>

#include "alef/error.hpp"
#include "alef/parallel.hpp"
#include "tsv.hpp"

namespace alef {

AuthorScoreTable individual_author_scores(const ScoreVector& paper_scores,
                                          const AuthorshipMap& authorship,
                                          unsigned threads) {
  if (paper_scores.values.size() < authorship.paper_count()) {
    throw ConfigError("score vector smaller than authorship paper universe");
  }
  AuthorScoreTable table;
  table.ia.assign(authorship.author_count(), std::nullopt);
  parallel_for(authorship.author_count(), threads,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t a = begin; a < end; ++a) {
                   double sum = 0.0;
                   std::size_t count = 0;
                   for (NodeId p : authorship.papers_of(static_cast<AuthorId>(a))) {
                     const double s = paper_scores.values[p];
                     if (s > 0.0) {
                       sum += s;
                       ++count;
                     }
                   }
                   if (count > 0) table.ia[a] = sum / static_cast<double>(count);
                 }
               });
  return table;
}

void paper_author_scores(AuthorScoreTable& table, const AuthorshipMap& authorship,
                         unsigned threads) {
  if (table.ia.size() != authorship.author_count()) {
    throw ConfigError("IA table does not match authorship author universe");
  }
  table.pa.assign(authorship.paper_count(), std::nullopt);
  parallel_for(authorship.paper_count(), threads,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t p = begin; p < end; ++p) {
                   double sum = 0.0;
                   std::size_t count = 0;
                   for (AuthorId a : authorship.authors_of(static_cast<NodeId>(p))) {
                     if (table.ia[a]) {
                       sum += *table.ia[a];
                       ++count;
                     }
                   }
                   if (count > 0) table.pa[p] = sum / static_cast<double>(count);
                 }
               });
}

void write_optional_scores(
    const std::filesystem::path& path, const StringInterner& ids,
    std::span<const std::optional<double>> values,
    std::span<const std::pair<std::string, std::string>> metadata) {
  if (ids.size() != values.size()) {
    throw ConfigError("score table size does not match id table");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << '\n';
  }
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    if (values[i]) {
      out << ids.name(i) << '\t' << format_score(*values[i]) << '\n';
    }
  }
  if (!out) throw IoError("write error on " + path.string());
}

std::vector<std::optional<double>> read_optional_scores(
    const std::filesystem::path& path, const StringInterner& universe,
    std::uint64_t* unresolved) {
  std::vector<std::optional<double>> values(universe.size(), std::nullopt);
  std::uint64_t skipped = 0;
  tsv::for_each_pair(
      path, Strictness::strict,
      [&](std::uint64_t line_no, std::string_view id, std::string_view score) {
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(score.data(), score.data() + score.size(), value);
        if (ec != std::errc{} || ptr != score.data() + score.size()) {
          throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": bad score value '" + std::string(score) + "'");
        }
        if (const auto id_index = universe.find(id)) {
          values[*id_index] = value;
        } else {
          ++skipped;
        }
      });
  if (unresolved) *unresolved = skipped;
  return values;
}

}  // namespace alef
