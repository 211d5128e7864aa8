#include "alef/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>
#include <utility>

#include "alef/error.hpp"
#include "tsv.hpp"

namespace alef {

std::uint32_t StringInterner::intern(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<std::uint32_t> StringInterner::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

CitationGraph::CitationGraph(StringInterner paper_ids, std::vector<Edge> edges)
    : ids_(std::move(paper_ids)), edges_(std::move(edges)) {
  rebuild();
}

void CitationGraph::rebuild() {
  const std::size_t n = ids_.size();
  fwd_offsets_.assign(n + 1, 0);
  rev_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++fwd_offsets_[e.citing + 1];
    ++rev_offsets_[e.cited + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    fwd_offsets_[i + 1] += fwd_offsets_[i];
    rev_offsets_[i + 1] += rev_offsets_[i];
  }
  fwd_targets_.resize(edges_.size());
  rev_targets_.resize(edges_.size());
  std::vector<std::uint64_t> fcur(fwd_offsets_.begin(), fwd_offsets_.end() - 1);
  std::vector<std::uint64_t> rcur(rev_offsets_.begin(), rev_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    fwd_targets_[fcur[e.citing]++] = e.cited;
    rev_targets_[rcur[e.cited]++] = e.citing;
  }
}

NodeId CitationGraph::add_isolated(std::string_view name) {
  const NodeId id = ids_.intern(name);
  while (fwd_offsets_.size() < ids_.size() + 1) {
    fwd_offsets_.push_back(fwd_offsets_.back());
    rev_offsets_.push_back(rev_offsets_.back());
  }
  return id;
}

AuthorshipMap::AuthorshipMap(StringInterner author_ids, std::size_t paper_count,
                             std::span<const std::pair<NodeId, AuthorId>> pairs)
    : author_ids_(std::move(author_ids)) {
  const std::size_t a = author_ids_.size();
  paper_offsets_.assign(paper_count + 1, 0);
  author_offsets_.assign(a + 1, 0);
  for (const auto& [p, au] : pairs) {
    ++paper_offsets_[p + 1];
    ++author_offsets_[au + 1];
  }
  for (std::size_t i = 0; i < paper_count; ++i) paper_offsets_[i + 1] += paper_offsets_[i];
  for (std::size_t i = 0; i < a; ++i) author_offsets_[i + 1] += author_offsets_[i];
  paper_authors_.resize(pairs.size());
  author_papers_.resize(pairs.size());
  std::vector<std::uint64_t> pcur(paper_offsets_.begin(), paper_offsets_.end() - 1);
  std::vector<std::uint64_t> acur(author_offsets_.begin(), author_offsets_.end() - 1);
  for (const auto& [p, au] : pairs) {
    paper_authors_[pcur[p]++] = au;
    author_papers_[acur[au]++] = p;
  }
}

namespace {

std::uint64_t pack(std::uint32_t hi, std::uint32_t lo) {
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

}  // namespace

EdgeLoadResult load_edges(const std::filesystem::path& path, Strictness strictness) {
  StringInterner ids;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  LoadCounts counts;

  counts.malformed_skipped = tsv::for_each_pair(
      path, strictness,
      [&](std::uint64_t line_no, std::string_view citing, std::string_view cited) {
        const NodeId u = ids.intern(citing);
        const NodeId v = ids.intern(cited);
        if (u == v) {
          if (strictness == Strictness::strict) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": self-loop '" + std::string(citing) + "'");
          }
          ++counts.self_loops_dropped;
          return;
        }
        if (!seen.insert(pack(u, v)).second) {
          if (strictness == Strictness::strict) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": duplicate edge");
          }
          ++counts.duplicates_dropped;
          return;
        }
        edges.push_back(Edge{u, v});
      });

  return EdgeLoadResult{CitationGraph(std::move(ids), std::move(edges)), counts};
}

AuthorshipLoadResult load_authorship(const std::filesystem::path& path,
                                     CitationGraph& graph, Strictness strictness) {
  StringInterner authors;
  std::vector<std::pair<NodeId, AuthorId>> pairs;
  std::unordered_set<std::uint64_t> seen;
  LoadCounts counts;

  counts.malformed_skipped = tsv::for_each_pair(
      path, strictness,
      [&](std::uint64_t, std::string_view paper, std::string_view author) {
        const auto existing = graph.paper_ids().find(paper);
        const NodeId p = existing ? *existing : graph.add_isolated(paper);
        const AuthorId a = authors.intern(author);
        if (!seen.insert(pack(p, a)).second) {
          ++counts.duplicates_dropped;
          return;
        }
        pairs.emplace_back(p, a);
      });

  return AuthorshipLoadResult{
      AuthorshipMap(std::move(authors), graph.node_count(), pairs), counts};
}

StatsReport graph_stats(const CitationGraph& graph) {
  StatsReport r;
  r.nodes = graph.node_count();
  r.edges = graph.edge_count();
  for (NodeId i = 0; i < r.nodes; ++i) {
    const bool in = graph.in_degree(i) > 0;
    const bool out = graph.out_degree(i) > 0;
    r.with_in_edges += in;
    r.with_out_edges += out;
    r.isolated += !in && !out;
    r.dangling += in && !out;
  }
  return r;
}

void write_edges(const std::filesystem::path& path, const CitationGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const Edge& e : graph.edges()) {
    out << graph.paper_ids().name(e.citing) << '\t'
        << graph.paper_ids().name(e.cited) << '\n';
  }
  if (!out) throw IoError("write error on " + path.string());
}

void write_id_map(const std::filesystem::path& path, const StringInterner& ids) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    out << ids.name(i) << '\t' << i << '\n';
  }
  if (!out) throw IoError("write error on " + path.string());
}

}  // namespace alef
