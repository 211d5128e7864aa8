#include "alef/scores.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "alef/error.hpp"
#include "tsv.hpp"

namespace alef {

std::size_t ScoreVector::positive_count() const {
  std::size_t n = 0;
  for (double v : values) n += v > 0.0;
  return n;
}

void ScoreVector::recompute_coverage() {
  coverage = values.empty()
                 ? 0.0
                 : static_cast<double>(positive_count()) /
                       static_cast<double>(values.size());
}

std::string format_score(double value) {
  char buf[32];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_scores(const std::filesystem::path& path, const StringInterner& ids,
                  const ScoreVector& scores,
                  std::span<const std::pair<std::string, std::string>> metadata) {
  if (ids.size() != scores.values.size()) {
    throw ConfigError("score vector size does not match id table");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << '\n';
  }
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    out << ids.name(i) << '\t' << format_score(scores.values[i]) << '\n';
  }
  if (!out) throw IoError("write error on " + path.string());
}

NamedScores read_scores(const std::filesystem::path& path) {
  NamedScores result;
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
        const std::uint32_t node = result.ids.intern(id);
        if (node != result.scores.values.size()) {
          throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": duplicate paper id '" + std::string(id) + "'");
        }
        result.scores.values.push_back(value);
      });
  result.scores.recompute_coverage();
  return result;
}

}  // namespace alef
