#pragma once

// Internal two-column TSV scanning shared by the loaders.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "alef/error.hpp"
#include "alef/corpus.hpp"

namespace alef::tsv {

// Calls fn(line_number, first_field, second_field) for every data line of
// a two-column TSV. '#' comment lines and blank lines are skipped. A line
// is malformed unless it contains exactly one tab separating two non-empty
// fields; malformed lines throw ParseError in strict mode and are counted
// in lenient mode. Returns the malformed-line count. Trailing '\r' is
// tolerated.
template <typename Fn>
std::uint64_t for_each_pair(const std::filesystem::path& path,
                            Strictness strictness, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  std::uint64_t malformed = 0;
  std::uint64_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;

    const std::size_t tab = sv.find('\t');
    const bool ok = tab != std::string_view::npos && tab > 0 &&
                    tab + 1 < sv.size() &&
                    sv.find('\t', tab + 1) == std::string_view::npos;
    if (!ok) {
      if (strictness == Strictness::strict) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) +
                         ": malformed line");
      }
      ++malformed;
      continue;
    }
    fn(line_no, sv.substr(0, tab), sv.substr(tab + 1));
  }
  if (in.bad()) throw IoError("read error on " + path.string());
  return malformed;
}

}  // namespace alef::tsv
