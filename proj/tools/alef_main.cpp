// Command-line front end for the citation-ranking toolkit. Every
// subcommand writes a <output>.manifest.json next to each file it
// produces; re-running the recorded argv (same seed, threads=1)
// reproduces the output byte for byte.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alef/author_scores.hpp"
#include "alef/baselines.hpp"
#include "alef/blend.hpp"
#include "alef/corpus.hpp"
#include "alef/error.hpp"
#include "alef/evaluate.hpp"
#include "alef/manifest.hpp"
#include "alef/scores.hpp"
#include "alef/synth.hpp"
#include "alef/version.hpp"
#include "alef/walk.hpp"

namespace {

using alef::AuthorScoreTable;
using alef::AuthorshipMap;
using alef::BlendConfig;
using alef::CitationGraph;
using alef::ConfigError;
using alef::DanglingPolicy;
using alef::EvalReport;
using alef::JudgmentSet;
using alef::NamedScores;
using alef::ScoreVector;
using alef::Strictness;
using alef::StringInterner;
using alef::WalkConfig;

using Metadata = std::vector<std::pair<std::string, std::string>>;

// Shortest round-trip decimal form; used for report values and metadata.
std::string fmt(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string fmt(bool value) { return value ? "true" : "false"; }

// Collects resolved arguments, inputs and outputs while a subcommand
// runs, then writes one manifest per output file.
class Recorder {
 public:
  explicit Recorder(std::string subcommand)
      : start_(std::chrono::steady_clock::now()) {
    manifest_.tool = std::string(alef::kToolName);
    manifest_.version = std::string(alef::kToolVersion);
    manifest_.subcommand = subcommand;
    manifest_.argv.push_back(std::move(subcommand));
  }

  void arg(const std::string& flag, const std::string& value) {
    manifest_.argv.push_back(flag);
    manifest_.argv.push_back(value);
    manifest_.parameters.emplace_back(flag.substr(2), value);
  }
  void arg(const std::string& flag, const char* value) { arg(flag, std::string(value)); }
  void arg(const std::string& flag, std::uint64_t v) { arg(flag, std::to_string(v)); }
  void arg(const std::string& flag, std::uint32_t v) { arg(flag, std::to_string(v)); }
  void arg(const std::string& flag, double v) { arg(flag, fmt(v)); }
  void flag(const std::string& name, bool on) {
    if (on) {
      manifest_.argv.push_back(name);
      manifest_.parameters.emplace_back(name.substr(2), "true");
    }
  }

  // Parameters that are not command-line flags (derived settings).
  void note(const std::string& key, const std::string& value) {
    manifest_.parameters.emplace_back(key, value);
  }

  void input(const std::string& role, const std::filesystem::path& path) {
    manifest_.inputs.push_back(
        {role, path.string(), alef::to_hex(alef::fnv1a64_file(path))});
  }
  void output(const std::filesystem::path& path) {
    manifest_.outputs.push_back(path.string());
  }

  void write_manifests() {
    manifest_.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    for (const std::string& out : manifest_.outputs) {
      alef::write_manifest(out + ".manifest.json", manifest_);
    }
  }

 private:
  alef::RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

void warn_load(const std::string& path, const alef::LoadCounts& counts) {
  if (counts.self_loops_dropped || counts.duplicates_dropped) {
    std::cerr << "warning: " << path << ": dropped " << counts.self_loops_dropped
              << " self-loops, " << counts.duplicates_dropped << " duplicates\n";
  }
  if (counts.malformed_skipped) {
    std::cerr << "warning: " << path << ": skipped " << counts.malformed_skipped
              << " malformed lines\n";
  }
}

// All subcommand options; CLI11 binds into this and each handler reads
// the fields its subcommand declared.
struct Options {
  std::string edges;
  std::string authors;
  std::string scores;
  std::string pa;
  std::string judgments;
  std::string out;
  std::string out_dir;
  std::string id_map;
  std::string ia_out;
  std::string pa_out;
  std::string json_out;
  std::string spearman_against;
  std::string config;
  std::string method = "alef";
  std::string dangling = "halt";
  std::string grid;
  std::uint32_t steps = 1;
  bool count_landing = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool strict = false;
  bool randomize = false;
  bool normalize = false;
  double alef_weight = 0.7;
  double author_weight = -1.0;  // default: 1 - alef_weight
  std::uint64_t papers = 0;
  double mean_out_degree = 2.0;
  double exponent = 1.0;
  std::uint64_t authors_count = 0;
  double mean_authors = 0.0;
  std::uint64_t judgment_pairs = 0;
  double noise = 0.0;
};

Strictness strictness(const Options& opt) {
  return opt.strict ? Strictness::strict : Strictness::lenient;
}

DanglingPolicy dangling_policy(const std::string& name) {
  return name == "self" ? DanglingPolicy::self_arrival : DanglingPolicy::halt;
}

// Loads the edge file and, when an authorship path is set, extends the
// graph with authorship-only papers so scores cover the whole corpus.
CitationGraph load_graph(const Options& opt, Recorder& rec,
                         AuthorshipMap* authorship_out = nullptr) {
  auto loaded = alef::load_edges(opt.edges, strictness(opt));
  rec.input("edges", opt.edges);
  warn_load(opt.edges, loaded.counts);
  if (!opt.authors.empty()) {
    auto authorship = alef::load_authorship(opt.authors, loaded.graph, strictness(opt));
    rec.input("authors", opt.authors);
    if (authorship.counts.duplicates_dropped || authorship.counts.malformed_skipped) {
      std::cerr << "warning: " << opt.authors << ": "
                << authorship.counts.duplicates_dropped << " duplicate pairs, "
                << authorship.counts.malformed_skipped << " malformed lines\n";
    }
    if (authorship_out) *authorship_out = std::move(authorship.map);
  }
  return std::move(loaded.graph);
}

Metadata walk_metadata(const std::string& method, const WalkConfig& config,
                       const CitationGraph& graph) {
  Metadata md;
  md.emplace_back("method", method);
  md.emplace_back("steps", std::to_string(config.steps_between_teleports));
  md.emplace_back("count_landing", fmt(config.count_landing_arrival));
  md.emplace_back("dangling",
                  config.dangling == DanglingPolicy::halt ? "halt" : "self");
  if (method == "alef-mc") {
    md.emplace_back("samples", std::to_string(config.sample_count));
    md.emplace_back("seed", std::to_string(config.seed));
    md.emplace_back("rng", "splitmix64");
  }
  md.emplace_back("nodes", std::to_string(graph.node_count()));
  md.emplace_back("edges", std::to_string(graph.edge_count()));
  return md;
}

Metadata blend_metadata(const BlendConfig& config, bool normalize,
                        std::size_t nodes) {
  Metadata md;
  md.emplace_back("method", "blend");
  md.emplace_back("alef_weight", fmt(config.alef_weight));
  md.emplace_back("author_weight", fmt(config.author_weight));
  md.emplace_back("randomize", fmt(config.randomize_unranked));
  if (config.randomize_unranked) {
    md.emplace_back("seed", std::to_string(config.seed));
    md.emplace_back("rng", "splitmix64");
  }
  md.emplace_back("normalize", fmt(normalize));
  md.emplace_back("nodes", std::to_string(nodes));
  return md;
}

// Re-indexes a scores file onto the graph's paper universe; papers
// without an entry score zero.
ScoreVector resolve_scores(const NamedScores& file, const CitationGraph& graph,
                           const std::string& path) {
  ScoreVector resolved;
  resolved.values.assign(graph.node_count(), 0.0);
  std::size_t matched = 0;
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    if (const auto id = file.ids.find(graph.paper_ids().name(i))) {
      resolved.values[i] = file.scores.values[*id];
      ++matched;
    }
  }
  if (matched < file.ids.size()) {
    std::cerr << "warning: " << path << ": " << (file.ids.size() - matched)
              << " score entries not present in the corpus\n";
  }
  resolved.recompute_coverage();
  return resolved;
}

WalkConfig walk_config(const Options& opt) {
  WalkConfig config;
  config.steps_between_teleports = opt.steps;
  config.count_landing_arrival = opt.count_landing;
  config.dangling = dangling_policy(opt.dangling);
  config.seed = opt.seed;
  config.sample_count = opt.samples;
  config.threads = opt.threads;
  return config;
}

int cmd_rank(const Options& opt, const CLI::App& cmd) {
  Recorder rec("rank");
  rec.arg("--method", opt.method);
  rec.arg("--edges", opt.edges);
  if (!opt.authors.empty()) rec.arg("--authors", opt.authors);
  rec.arg("--out", opt.out);

  CitationGraph graph = load_graph(opt, rec);
  const WalkConfig config = walk_config(opt);

  ScoreVector scores;
  Metadata md;
  if (opt.method == "alef") {
    rec.arg("--steps", opt.steps);
    rec.arg("--count-landing", fmt(opt.count_landing));
    rec.arg("--dangling", opt.dangling);
    scores = alef::alef_rank(graph, config);
    md = walk_metadata("alef", config, graph);
  } else if (opt.method == "alef-mc") {
    if (opt.samples == 0) throw ConfigError("--method alef-mc requires --samples");
    if (cmd.count("--seed") == 0) throw ConfigError("--method alef-mc requires --seed");
    rec.arg("--steps", opt.steps);
    rec.arg("--count-landing", fmt(opt.count_landing));
    rec.arg("--dangling", opt.dangling);
    rec.arg("--samples", opt.samples);
    rec.arg("--seed", opt.seed);
    scores = alef::alef_monte_carlo(graph, config);
    md = walk_metadata("alef-mc", config, graph);
  } else {  // indegree
    scores = alef::in_degree_rank(graph);
    md.emplace_back("method", "indegree");
    md.emplace_back("nodes", std::to_string(graph.node_count()));
    md.emplace_back("edges", std::to_string(graph.edge_count()));
  }
  rec.arg("--threads", std::uint64_t{opt.threads});
  rec.flag("--strict", opt.strict);

  alef::write_scores(opt.out, graph.paper_ids(), scores, md);
  rec.output(opt.out);
  if (!opt.id_map.empty()) {
    alef::write_id_map(opt.id_map, graph.paper_ids());
    rec.arg("--id-map", opt.id_map);
    rec.output(opt.id_map);
  }
  rec.write_manifests();
  std::cerr << "ranked " << graph.node_count() << " papers ("
            << scores.positive_count() << " positive)\n";
  return 0;
}

int cmd_authors(const Options& opt) {
  Recorder rec("authors");
  rec.arg("--edges", opt.edges);
  rec.arg("--authors", opt.authors);
  rec.arg("--scores", opt.scores);
  rec.arg("--ia-out", opt.ia_out);
  rec.arg("--pa-out", opt.pa_out);
  rec.arg("--threads", std::uint64_t{opt.threads});
  rec.flag("--strict", opt.strict);

  AuthorshipMap authorship;
  CitationGraph graph = load_graph(opt, rec, &authorship);
  NamedScores file = alef::read_scores(opt.scores);
  rec.input("scores", opt.scores);
  const ScoreVector paper_scores = resolve_scores(file, graph, opt.scores);

  AuthorScoreTable table =
      alef::individual_author_scores(paper_scores, authorship, opt.threads);
  alef::paper_author_scores(table, authorship, opt.threads);

  Metadata ia_md;
  ia_md.emplace_back("method", "ia");
  ia_md.emplace_back("authors", std::to_string(authorship.author_count()));
  alef::write_optional_scores(opt.ia_out, authorship.author_ids(), table.ia, ia_md);
  rec.output(opt.ia_out);

  Metadata pa_md;
  pa_md.emplace_back("method", "pa");
  pa_md.emplace_back("papers", std::to_string(graph.node_count()));
  alef::write_optional_scores(opt.pa_out, graph.paper_ids(), table.pa, pa_md);
  rec.output(opt.pa_out);

  rec.write_manifests();
  std::size_t defined_ia = 0, defined_pa = 0;
  for (const auto& v : table.ia) defined_ia += v.has_value();
  for (const auto& v : table.pa) defined_pa += v.has_value();
  std::cerr << "derived " << defined_ia << " IA and " << defined_pa
            << " PA scores\n";
  return 0;
}

BlendConfig blend_config(const Options& opt) {
  BlendConfig config;
  config.alef_weight = opt.alef_weight;
  config.author_weight =
      opt.author_weight < 0.0 ? 1.0 - opt.alef_weight : opt.author_weight;
  config.randomize_unranked = opt.randomize;
  config.seed = opt.seed;
  config.threads = opt.threads;
  return config;
}

int cmd_blend(const Options& opt, const CLI::App& cmd) {
  Recorder rec("blend");
  rec.arg("--scores", opt.scores);
  if (!opt.pa.empty()) rec.arg("--pa", opt.pa);
  rec.arg("--out", opt.out);

  const BlendConfig config = blend_config(opt);
  rec.arg("--alef-weight", config.alef_weight);
  rec.arg("--author-weight", config.author_weight);
  if (opt.randomize) {
    if (cmd.count("--seed") == 0) throw ConfigError("--randomize requires --seed");
    rec.flag("--randomize", true);
    rec.arg("--seed", opt.seed);
  }
  rec.arg("--threads", std::uint64_t{opt.threads});

  NamedScores citation = alef::read_scores(opt.scores);
  rec.input("scores", opt.scores);

  AuthorScoreTable table;
  if (!opt.pa.empty()) {
    std::uint64_t unresolved = 0;
    table.pa = alef::read_optional_scores(opt.pa, citation.ids, &unresolved);
    rec.input("pa", opt.pa);
    if (unresolved > 0) {
      std::cerr << "warning: " << opt.pa << ": " << unresolved
                << " PA entries not present in the corpus\n";
    }
  }

  ScoreVector blended = alef::blend_scores(citation.scores, table, config);
  if (config.randomize_unranked) {
    if (blended.positive_count() == 0) {
      std::cerr << "warning: no ranked papers; randomized fill skipped\n";
    }
    blended = alef::randomize_unranked(blended, config.seed);
  }
  if (opt.normalize) {
    rec.flag("--normalize", true);
    alef::normalize_to_unit(blended);
  }

  alef::write_scores(opt.out, citation.ids, blended,
                     blend_metadata(config, opt.normalize, blended.values.size()));
  rec.output(opt.out);
  rec.write_manifests();
  std::cerr << "blended " << blended.values.size() << " papers ("
            << blended.positive_count() << " positive)\n";
  return 0;
}

int cmd_randomize(const Options& opt) {
  Recorder rec("randomize");
  rec.arg("--scores", opt.scores);
  rec.arg("--seed", opt.seed);
  rec.arg("--out", opt.out);

  NamedScores scores = alef::read_scores(opt.scores);
  rec.input("scores", opt.scores);
  if (scores.scores.positive_count() == 0) {
    std::cerr << "warning: no ranked papers; output unchanged\n";
  }
  const ScoreVector filled = alef::randomize_unranked(scores.scores, opt.seed);

  Metadata md;
  md.emplace_back("method", "randomize");
  md.emplace_back("seed", std::to_string(opt.seed));
  md.emplace_back("rng", "splitmix64");
  md.emplace_back("nodes", std::to_string(filled.values.size()));
  alef::write_scores(opt.out, scores.ids, filled, md);
  rec.output(opt.out);
  rec.write_manifests();
  return 0;
}

int cmd_eval(const Options& opt) {
  Recorder rec("eval");
  rec.arg("--scores", opt.scores);
  rec.arg("--judgments", opt.judgments);

  NamedScores scores = alef::read_scores(opt.scores);
  rec.input("scores", opt.scores);
  JudgmentSet judgments =
      alef::load_judgments(opt.judgments, scores.ids, strictness(opt));
  rec.input("judgments", opt.judgments);
  if (judgments.excluded_pairs > 0) {
    std::cerr << "warning: " << opt.judgments << ": excluded "
              << judgments.excluded_pairs
              << " pairs (unknown ids, self pairs or malformed lines)\n";
  }
  if (judgments.pairs.empty()) {
    throw ConfigError("judgment set '" + opt.judgments +
                      "' contains no usable pairs");
  }

  const EvalReport report = alef::pairwise_performance(scores.scores, judgments);

  std::optional<double> rho;
  bool have_compare = false;
  if (!opt.spearman_against.empty()) {
    have_compare = true;
    NamedScores against = alef::read_scores(opt.spearman_against);
    rec.input("spearman-against", opt.spearman_against);
    rec.arg("--spearman-against", opt.spearman_against);
    if (against.ids.size() != scores.ids.size()) {
      throw ConfigError("scores files cover different corpora");
    }
    ScoreVector aligned;
    aligned.values.assign(scores.ids.size(), 0.0);
    for (std::uint32_t i = 0; i < scores.ids.size(); ++i) {
      const auto id = against.ids.find(scores.ids.name(i));
      if (!id) throw ConfigError("scores files cover different corpora");
      aligned.values[i] = against.scores.values[*id];
    }
    rho = alef::spearman_correlation(scores.scores, aligned);
  }

  std::string text;
  text += "performance: " + fmt(report.performance) + "\n";
  text += "coverage: " + fmt(report.coverage) + "\n";
  text += "uniqueness: " + fmt(report.uniqueness) + "\n";
  text += "agree: " + std::to_string(report.agree) + "\n";
  text += "disagree: " + std::to_string(report.disagree) + "\n";
  text += "tie: " + std::to_string(report.tie) + "\n";
  text += "excluded_pairs: " + std::to_string(report.excluded_pairs) + "\n";
  if (have_compare) {
    text += "spearman: " + (rho ? fmt(*rho) : std::string("undefined")) + "\n";
  }

  if (!opt.out.empty()) {
    rec.arg("--out", opt.out);
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw alef::IoError("cannot open " + opt.out + " for writing");
    out << text;
    rec.output(opt.out);
  } else {
    std::cout << text;
  }
  if (!opt.json_out.empty()) {
    rec.arg("--json", opt.json_out);
    nlohmann::ordered_json j;
    j["performance"] = report.performance;
    j["coverage"] = report.coverage;
    j["uniqueness"] = report.uniqueness;
    j["agree"] = report.agree;
    j["disagree"] = report.disagree;
    j["tie"] = report.tie;
    j["excluded_pairs"] = report.excluded_pairs;
    if (have_compare) {
      if (rho) {
        j["spearman"] = *rho;
      } else {
        j["spearman"] = nullptr;
      }
    }
    std::ofstream out(opt.json_out, std::ios::binary);
    if (!out) throw alef::IoError("cannot open " + opt.json_out + " for writing");
    out << j.dump(2) << '\n';
    rec.output(opt.json_out);
  }
  rec.flag("--strict", opt.strict);
  rec.write_manifests();
  return 0;
}

std::vector<std::pair<double, double>> parse_grid(const std::string& grid) {
  std::vector<std::pair<double, double>> result;
  std::size_t pos = 0;
  while (pos < grid.size()) {
    std::size_t comma = grid.find(',', pos);
    if (comma == std::string::npos) comma = grid.size();
    const std::string_view entry(grid.data() + pos, comma - pos);
    const std::size_t colon = entry.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("grid entry '" + std::string(entry) +
                        "' is not of the form alef:author");
    }
    double a = 0.0, b = 0.0;
    const auto ra = std::from_chars(entry.data(), entry.data() + colon, a);
    const auto rb =
        std::from_chars(entry.data() + colon + 1, entry.data() + entry.size(), b);
    if (ra.ec != std::errc{} || ra.ptr != entry.data() + colon ||
        rb.ec != std::errc{} || rb.ptr != entry.data() + entry.size()) {
      throw ConfigError("grid entry '" + std::string(entry) + "' has bad numbers");
    }
    result.emplace_back(a, b);
    pos = comma + 1;
  }
  if (result.empty()) throw ConfigError("weight sweep grid is empty");
  return result;
}

int cmd_sweep(const Options& opt) {
  Recorder rec("sweep");
  rec.arg("--scores", opt.scores);
  if (!opt.pa.empty()) rec.arg("--pa", opt.pa);
  rec.arg("--judgments", opt.judgments);
  rec.arg("--grid", opt.grid);
  rec.arg("--threads", std::uint64_t{opt.threads});

  const auto grid = parse_grid(opt.grid);

  NamedScores citation = alef::read_scores(opt.scores);
  rec.input("scores", opt.scores);
  AuthorScoreTable table;
  if (!opt.pa.empty()) {
    std::uint64_t unresolved = 0;
    table.pa = alef::read_optional_scores(opt.pa, citation.ids, &unresolved);
    rec.input("pa", opt.pa);
    if (unresolved > 0) {
      std::cerr << "warning: " << opt.pa << ": " << unresolved
                << " PA entries not present in the corpus\n";
    }
  }
  JudgmentSet judgments =
      alef::load_judgments(opt.judgments, citation.ids, strictness(opt));
  rec.input("judgments", opt.judgments);
  if (judgments.pairs.empty()) {
    throw ConfigError("judgment set '" + opt.judgments +
                      "' contains no usable pairs");
  }

  const alef::SweepReport sweep =
      alef::weight_sweep(citation.scores, table, judgments, grid, opt.threads);

  std::string text = "alef_weight\tauthor_weight\tperformance\tagree\tdisagree\ttie\n";
  for (const auto& point : sweep.points) {
    text += fmt(point.alef_weight) + "\t" + fmt(point.author_weight) + "\t" +
            fmt(point.report.performance) + "\t" +
            std::to_string(point.report.agree) + "\t" +
            std::to_string(point.report.disagree) + "\t" +
            std::to_string(point.report.tie) + "\n";
  }
  const auto& best = sweep.points[sweep.best_index];
  text += "best: " + fmt(best.alef_weight) + ":" + fmt(best.author_weight) +
          " performance: " + fmt(best.report.performance) + "\n";

  if (!opt.out.empty()) {
    rec.arg("--out", opt.out);
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw alef::IoError("cannot open " + opt.out + " for writing");
    out << text;
    rec.output(opt.out);
  } else {
    std::cout << text;
  }
  if (!opt.json_out.empty()) {
    rec.arg("--json", opt.json_out);
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& point : sweep.points) {
      points.push_back({{"alef_weight", point.alef_weight},
                        {"author_weight", point.author_weight},
                        {"performance", point.report.performance},
                        {"agree", point.report.agree},
                        {"disagree", point.report.disagree},
                        {"tie", point.report.tie}});
    }
    nlohmann::ordered_json j;
    j["points"] = points;
    j["best_index"] = sweep.best_index;
    std::ofstream out(opt.json_out, std::ios::binary);
    if (!out) throw alef::IoError("cannot open " + opt.json_out + " for writing");
    out << j.dump(2) << '\n';
    rec.output(opt.json_out);
  }
  rec.write_manifests();
  return 0;
}

int cmd_synth(const Options& opt) {
  Recorder rec("synth");
  rec.arg("--papers", opt.papers);
  rec.arg("--mean-out-degree", opt.mean_out_degree);
  rec.arg("--exponent", opt.exponent);
  rec.arg("--authors-count", opt.authors_count);
  rec.arg("--mean-authors", opt.mean_authors);
  rec.arg("--judgment-pairs", opt.judgment_pairs);
  rec.arg("--noise", opt.noise);
  rec.arg("--seed", opt.seed);
  rec.arg("--out-dir", opt.out_dir);
  rec.note("rng", "splitmix64");
  if (opt.judgment_pairs > 0) {
    rec.note("judgment_oracle", "alef closed form, defaults");
  }

  alef::SynthConfig config;
  config.paper_count = opt.papers;
  config.mean_out_degree = opt.mean_out_degree;
  config.preferential_exponent = opt.exponent;
  config.author_count = opt.authors_count;
  config.mean_authors_per_paper = opt.mean_authors;
  config.seed = opt.seed;

  const alef::SynthCorpus corpus = alef::generate_corpus(config);

  std::filesystem::create_directories(opt.out_dir);
  const std::filesystem::path dir(opt.out_dir);

  const auto edges_path = dir / "edges.tsv";
  alef::write_edges(edges_path, corpus.graph);
  rec.output(edges_path);

  if (corpus.authorship.pair_count() > 0) {
    const auto authors_path = dir / "authors.tsv";
    std::ofstream out(authors_path, std::ios::binary);
    if (!out) throw alef::IoError("cannot open " + authors_path.string());
    for (std::uint32_t p = 0; p < corpus.graph.node_count(); ++p) {
      for (alef::AuthorId a : corpus.authorship.authors_of(p)) {
        out << corpus.graph.paper_ids().name(p) << '\t'
            << corpus.authorship.author_ids().name(a) << '\n';
      }
    }
    if (!out) throw alef::IoError("write error on " + authors_path.string());
    rec.output(authors_path);
  }

  if (opt.judgment_pairs > 0) {
    // The judging oracle is the default closed-form ranking.
    const ScoreVector oracle = alef::alef_rank(corpus.graph, WalkConfig{});
    const JudgmentSet judgments = alef::generate_judgments(
        corpus.graph, oracle, opt.judgment_pairs, opt.noise, opt.seed);
    const auto judgments_path = dir / "judgments.tsv";
    alef::write_judgments(judgments_path, corpus.graph.paper_ids(), judgments);
    rec.output(judgments_path);
  }

  rec.write_manifests();
  std::cerr << "generated " << corpus.graph.node_count() << " papers, "
            << corpus.graph.edge_count() << " edges, "
            << corpus.authorship.pair_count() << " authorship pairs\n";
  return 0;
}

int cmd_stats(const Options& opt) {
  Recorder rec("stats");
  rec.arg("--edges", opt.edges);
  if (!opt.authors.empty()) rec.arg("--authors", opt.authors);
  rec.flag("--strict", opt.strict);

  auto loaded = alef::load_edges(opt.edges, strictness(opt));
  rec.input("edges", opt.edges);
  alef::LoadCounts author_counts;
  AuthorshipMap authorship;
  if (!opt.authors.empty()) {
    auto result = alef::load_authorship(opt.authors, loaded.graph, strictness(opt));
    rec.input("authors", opt.authors);
    author_counts = result.counts;
    authorship = std::move(result.map);
  }

  const alef::StatsReport stats = alef::graph_stats(loaded.graph);
  std::cout << "nodes: " << stats.nodes << "\n"
            << "edges: " << stats.edges << "\n"
            << "with_in_edges: " << stats.with_in_edges << "\n"
            << "with_out_edges: " << stats.with_out_edges << "\n"
            << "isolated: " << stats.isolated << "\n"
            << "dangling: " << stats.dangling << "\n"
            << "self_loops_dropped: " << loaded.counts.self_loops_dropped << "\n"
            << "duplicates_dropped: " << loaded.counts.duplicates_dropped << "\n"
            << "malformed_skipped: " << loaded.counts.malformed_skipped << "\n";
  if (!opt.authors.empty()) {
    std::cout << "authors: " << authorship.author_count() << "\n"
              << "authorship_pairs: " << authorship.pair_count() << "\n"
              << "authorship_duplicates_dropped: "
              << author_counts.duplicates_dropped << "\n";
  }

  if (!opt.id_map.empty()) {
    alef::write_id_map(opt.id_map, loaded.graph.paper_ids());
    rec.arg("--id-map", opt.id_map);
    rec.output(opt.id_map);
  }
  rec.write_manifests();
  return 0;
}

int cmd_pipeline(const Options& opt) {
  Recorder rec("pipeline");
  rec.arg("--config", opt.config);

  std::ifstream in(opt.config, std::ios::binary);
  if (!in) throw alef::IoError("cannot open " + opt.config);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw alef::ParseError(opt.config + ": " + std::string(e.what()));
  }
  rec.input("config", opt.config);

  if (!j.contains("edges") || !j.contains("out")) {
    throw ConfigError("pipeline config needs at least 'edges' and 'out'");
  }

  Options steps = opt;
  steps.edges = j["edges"].get<std::string>();
  steps.authors = j.value("authors", std::string{});
  const std::string final_out = j["out"].get<std::string>();
  const auto walk = j.value("walk", nlohmann::json::object());
  steps.steps = walk.value("steps", 1u);
  steps.count_landing = walk.value("count_landing", true);
  steps.dangling = walk.value("dangling", "halt");
  const auto blend = j.value("blend", nlohmann::json::object());
  steps.alef_weight = blend.value("alef_weight", 0.7);
  steps.author_weight = blend.value("author_weight", 1.0 - steps.alef_weight);
  steps.normalize = blend.value("normalize", false);
  const auto randomize = j.value("randomize", nlohmann::json::object());
  steps.randomize = randomize.value("enabled", false);
  steps.seed = randomize.value("seed", std::uint64_t{0});
  steps.threads = j.value("threads", 1u);

  AuthorshipMap authorship;
  CitationGraph graph = load_graph(steps, rec, &authorship);

  WalkConfig wc = walk_config(steps);
  const ScoreVector citation = alef::alef_rank(graph, wc);

  AuthorScoreTable table;
  const bool have_authors = !steps.authors.empty();
  if (have_authors) {
    table = alef::individual_author_scores(citation, authorship, steps.threads);
    alef::paper_author_scores(table, authorship, steps.threads);
  }

  const BlendConfig bc = blend_config(steps);
  ScoreVector final_scores = alef::blend_scores(citation, table, bc);
  if (bc.randomize_unranked) {
    if (final_scores.positive_count() == 0) {
      std::cerr << "warning: no ranked papers; randomized fill skipped\n";
    }
    final_scores = alef::randomize_unranked(final_scores, bc.seed);
  }
  if (steps.normalize) alef::normalize_to_unit(final_scores);

  // Optional intermediates use the same writers and metadata as the
  // stepwise commands, so the files come out byte-identical.
  const auto intermediates = j.value("intermediates", nlohmann::json::object());
  if (intermediates.contains("alef")) {
    const std::string path = intermediates["alef"].get<std::string>();
    alef::write_scores(path, graph.paper_ids(), citation,
                       walk_metadata("alef", wc, graph));
    rec.output(path);
  }
  if (have_authors && intermediates.contains("ia")) {
    const std::string path = intermediates["ia"].get<std::string>();
    Metadata md;
    md.emplace_back("method", "ia");
    md.emplace_back("authors", std::to_string(authorship.author_count()));
    alef::write_optional_scores(path, authorship.author_ids(), table.ia, md);
    rec.output(path);
  }
  if (have_authors && intermediates.contains("pa")) {
    const std::string path = intermediates["pa"].get<std::string>();
    Metadata md;
    md.emplace_back("method", "pa");
    md.emplace_back("papers", std::to_string(graph.node_count()));
    alef::write_optional_scores(path, graph.paper_ids(), table.pa, md);
    rec.output(path);
  }

  alef::write_scores(final_out, graph.paper_ids(), final_scores,
                     blend_metadata(bc, steps.normalize, final_scores.values.size()));
  rec.output(final_out);
  rec.write_manifests();
  std::cerr << "pipeline wrote " << final_out << " ("
            << final_scores.positive_count() << " positive of "
            << final_scores.values.size() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"article-level citation ranking toolkit"};
  app.set_version_flag("--version", std::string(alef::kToolName) + " " +
                                        std::string(alef::kToolVersion) +
                                        " (rng: splitmix64)");
  app.require_subcommand(1);
  Options opt;

  CLI::App* rank = app.add_subcommand("rank", "score papers from the citation graph");
  rank->add_option("--edges", opt.edges, "edges.tsv input")->required();
  rank->add_option("--authors", opt.authors,
                   "authors.tsv; adds authorship-only papers to the universe");
  rank->add_option("--out", opt.out, "scores.tsv output")->required();
  rank->add_option("--method", opt.method, "alef | alef-mc | indegree")
      ->check(CLI::IsMember({"alef", "alef-mc", "indegree"}));
  rank->add_option("--steps", opt.steps, "walk steps between teleports (k)")
      ->check(CLI::PositiveNumber);
  rank->add_option("--count-landing", opt.count_landing,
                   "count the teleport landing as an arrival (true|false)");
  rank->add_option("--dangling", opt.dangling, "dangling policy: halt | self")
      ->check(CLI::IsMember({"halt", "self"}));
  rank->add_option("--samples", opt.samples, "Monte Carlo trials (alef-mc)");
  rank->add_option("--seed", opt.seed, "PRNG seed (alef-mc)");
  rank->add_option("--threads", opt.threads, "worker threads (1 = canonical)");
  rank->add_flag("--strict", opt.strict, "fail on malformed or duplicate input");
  rank->add_option("--id-map", opt.id_map, "also write id-map.tsv");

  CLI::App* authors = app.add_subcommand("authors", "derive IA and PA scores");
  authors->add_option("--edges", opt.edges, "edges.tsv input")->required();
  authors->add_option("--authors", opt.authors, "authors.tsv input")->required();
  authors->add_option("--scores", opt.scores, "paper scores.tsv input")->required();
  authors->add_option("--ia-out", opt.ia_out, "ia.tsv output")->required();
  authors->add_option("--pa-out", opt.pa_out, "pa.tsv output")->required();
  authors->add_option("--threads", opt.threads, "worker threads");
  authors->add_flag("--strict", opt.strict, "fail on malformed input");

  CLI::App* blend = app.add_subcommand("blend", "combine citation and PA scores");
  blend->add_option("--scores", opt.scores, "citation scores.tsv input")->required();
  blend->add_option("--pa", opt.pa, "pa.tsv input (omit to pass citation through)");
  blend->add_option("--out", opt.out, "blended scores.tsv output")->required();
  blend->add_option("--alef-weight", opt.alef_weight, "citation-score weight");
  blend->add_option("--author-weight", opt.author_weight,
                    "author-score weight (default 1 - alef-weight)");
  blend->add_flag("--randomize", opt.randomize, "fill unranked papers randomly");
  blend->add_option("--seed", opt.seed, "PRNG seed (with --randomize)");
  blend->add_flag("--normalize", opt.normalize,
                  "divide by the maximum score at export (maps onto [0,1])");
  blend->add_option("--threads", opt.threads, "worker threads");

  CLI::App* randomize = app.add_subcommand("randomize", "fill unranked papers randomly");
  randomize->add_option("--scores", opt.scores, "scores.tsv input")->required();
  randomize->add_option("--seed", opt.seed, "PRNG seed")->required();
  randomize->add_option("--out", opt.out, "scores.tsv output")->required();

  CLI::App* eval = app.add_subcommand("eval", "score a ranking against judgments");
  eval->add_option("--scores", opt.scores, "scores.tsv input")->required();
  eval->add_option("--judgments", opt.judgments, "judgments.tsv input")->required();
  eval->add_option("--out", opt.out, "report file (default: stdout)");
  eval->add_option("--json", opt.json_out, "machine-readable report file");
  eval->add_option("--spearman-against", opt.spearman_against,
                   "second scores.tsv; adds rank correlation to the report");
  eval->add_flag("--strict", opt.strict, "fail on malformed input");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate blend weight pairs");
  sweep->add_option("--scores", opt.scores, "citation scores.tsv input")->required();
  sweep->add_option("--pa", opt.pa, "pa.tsv input");
  sweep->add_option("--judgments", opt.judgments, "judgments.tsv input")->required();
  sweep->add_option("--grid", opt.grid, "weight pairs, e.g. 0.7:0.3,0.5:0.5")
      ->required();
  sweep->add_option("--out", opt.out, "report file (default: stdout)");
  sweep->add_option("--json", opt.json_out, "machine-readable report file");
  sweep->add_option("--threads", opt.threads, "worker threads");

  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  synth->add_option("--papers", opt.papers, "number of papers")->required();
  synth->add_option("--mean-out-degree", opt.mean_out_degree, "mean references per paper");
  synth->add_option("--exponent", opt.exponent,
                    "preferential-attachment exponent (0 = uniform)");
  synth->add_option("--authors-count", opt.authors_count, "number of authors");
  synth->add_option("--mean-authors", opt.mean_authors, "mean authors per paper");
  synth->add_option("--judgment-pairs", opt.judgment_pairs,
                    "judgment pairs to derive from the default ranking");
  synth->add_option("--noise", opt.noise, "judgment flip probability");
  synth->add_option("--seed", opt.seed, "PRNG seed")->required();
  synth->add_option("--out-dir", opt.out_dir, "output directory")->required();

  CLI::App* stats = app.add_subcommand("stats", "print corpus statistics");
  stats->add_option("--edges", opt.edges, "edges.tsv input")->required();
  stats->add_option("--authors", opt.authors, "authors.tsv input");
  stats->add_option("--id-map", opt.id_map, "also write id-map.tsv");
  stats->add_flag("--strict", opt.strict, "fail on malformed input");

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "rank, derive author scores, blend and export in one run");
  pipeline->add_option("--config", opt.config, "pipeline config JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed()) return cmd_rank(opt, *rank);
    if (authors->parsed()) return cmd_authors(opt);
    if (blend->parsed()) return cmd_blend(opt, *blend);
    if (randomize->parsed()) return cmd_randomize(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (synth->parsed()) return cmd_synth(opt);
    if (stats->parsed()) return cmd_stats(opt);
    if (pipeline->parsed()) return cmd_pipeline(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
