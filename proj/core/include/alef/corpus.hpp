#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alef {

// Dense node index, assigned by interning order of first appearance.
using NodeId = std::uint32_t;
using AuthorId = std::uint32_t;

enum class Strictness { strict, lenient };

// Interns arbitrary string identifiers to dense 0..N-1 indices. Interning
// order is the order of first appearance, so identical inputs always
// produce identical assignments.
class StringInterner {
 public:
  std::uint32_t intern(std::string_view name);
  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::string& name(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
  std::vector<std::string> names_;
};

struct Edge {
  NodeId citing;
  NodeId cited;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed citation graph over interned paper ids. Edges are kept in their
// original load order (this is what write_edges emits, making round trips
// reproduce identical interning); forward and reverse adjacency are CSR.
// Immutable once built except for add_isolated(), which appends
// degree-zero nodes.
class CitationGraph {
 public:
  CitationGraph() { rebuild(); }
  // `edges` must already be free of self-loops and duplicates.
  CitationGraph(StringInterner paper_ids, std::vector<Edge> edges);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  std::span<const NodeId> cites(NodeId u) const {
    return {fwd_targets_.data() + fwd_offsets_[u],
            fwd_targets_.data() + fwd_offsets_[u + 1]};
  }
  std::span<const NodeId> cited_by(NodeId v) const {
    return {rev_targets_.data() + rev_offsets_[v],
            rev_targets_.data() + rev_offsets_[v + 1]};
  }

  std::size_t out_degree(NodeId u) const {
    return fwd_offsets_[u + 1] - fwd_offsets_[u];
  }
  std::size_t in_degree(NodeId v) const {
    return rev_offsets_[v + 1] - rev_offsets_[v];
  }

  const StringInterner& paper_ids() const { return ids_; }

  // Appends a node with no edges (papers known only from authorship).
  NodeId add_isolated(std::string_view name);

 private:
  void rebuild();

  StringInterner ids_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> fwd_offsets_;
  std::vector<NodeId> fwd_targets_;
  std::vector<std::uint64_t> rev_offsets_;
  std::vector<NodeId> rev_targets_;
};

// Bipartite paper <-> author relation. Both directions are CSR over the
// same (paper, author) pairs, so they are transposes by construction.
class AuthorshipMap {
 public:
  AuthorshipMap() = default;
  // `pairs` must already be deduplicated.
  AuthorshipMap(StringInterner author_ids, std::size_t paper_count,
                std::span<const std::pair<NodeId, AuthorId>> pairs);

  std::size_t paper_count() const { return paper_offsets_.empty() ? 0 : paper_offsets_.size() - 1; }
  std::size_t author_count() const { return author_ids_.size(); }
  std::size_t pair_count() const { return paper_authors_.size(); }

  std::span<const AuthorId> authors_of(NodeId paper) const {
    return {paper_authors_.data() + paper_offsets_[paper],
            paper_authors_.data() + paper_offsets_[paper + 1]};
  }
  std::span<const NodeId> papers_of(AuthorId author) const {
    return {author_papers_.data() + author_offsets_[author],
            author_papers_.data() + author_offsets_[author + 1]};
  }

  const StringInterner& author_ids() const { return author_ids_; }

 private:
  StringInterner author_ids_;
  std::vector<std::uint64_t> paper_offsets_;
  std::vector<AuthorId> paper_authors_;
  std::vector<std::uint64_t> author_offsets_;
  std::vector<NodeId> author_papers_;
};

struct LoadCounts {
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
  std::uint64_t malformed_skipped = 0;
};

struct EdgeLoadResult {
  CitationGraph graph;
  LoadCounts counts;
};

struct AuthorshipLoadResult {
  AuthorshipMap map;
  LoadCounts counts;  // self_loops_dropped unused
};

// edges.tsv: "citing<TAB>cited", '#' comments, blank lines ignored.
// Strict mode raises ParseError on malformed lines, self-loops and
// duplicate edges; lenient mode drops them and reports counts.
EdgeLoadResult load_edges(const std::filesystem::path& path, Strictness strictness);

// authors.tsv: "paper<TAB>author". Papers absent from the graph are added
// as isolated nodes. Duplicate pairs are deduplicated (and counted) in
// both modes; malformed lines behave as in load_edges.
AuthorshipLoadResult load_authorship(const std::filesystem::path& path,
                                     CitationGraph& graph, Strictness strictness);

struct StatsReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t with_in_edges = 0;
  std::size_t with_out_edges = 0;
  std::size_t isolated = 0;  // in_degree == 0 and out_degree == 0
  std::size_t dangling = 0;  // out_degree == 0 and in_degree > 0
};

StatsReport graph_stats(const CitationGraph& graph);

// Writes edges in stored (load) order; reloading reproduces the graph.
void write_edges(const std::filesystem::path& path, const CitationGraph& graph);

// id-map.tsv: "string_id<TAB>node_id".
void write_id_map(const std::filesystem::path& path, const StringInterner& ids);

}  // namespace alef
