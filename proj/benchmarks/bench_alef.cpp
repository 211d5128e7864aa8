#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>

#include "alef/baselines.hpp"
#include "alef/corpus.hpp"
#include "alef/evaluate.hpp"
#include "alef/synth.hpp"
#include "alef/walk.hpp"

namespace {

alef::SynthCorpus corpus_of(std::int64_t papers, double mean_out) {
  alef::SynthConfig config;
  config.paper_count = static_cast<std::uint64_t>(papers);
  config.mean_out_degree = mean_out;
  config.preferential_exponent = 1.0;
  config.seed = 42;
  return alef::generate_corpus(config);
}

void BM_ClosedForm(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0), 5.0);
  alef::WalkConfig config;
  config.steps_between_teleports = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alef::alef_closed_form(corpus.graph, config));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(corpus.graph.edge_count()));
}
BENCHMARK(BM_ClosedForm)
    ->Args({10000, 1})
    ->Args({100000, 1})
    ->Args({1000000, 1})
    ->Args({100000, 3})
    ->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto corpus = corpus_of(10000, 5.0);
  alef::WalkConfig config;
  config.sample_count = static_cast<std::uint64_t>(state.range(0));
  config.seed = 7;
  config.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alef::alef_monte_carlo(corpus.graph, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

void BM_InDegree(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0), 5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alef::in_degree_rank(corpus.graph));
  }
}
BENCHMARK(BM_InDegree)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_LoadEdges(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0), 5.0);
  const auto path = std::filesystem::temp_directory_path() /
                    ("alef-bench-" + std::to_string(state.range(0)) + ".tsv");
  alef::write_edges(path, corpus.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alef::load_edges(path, alef::Strictness::lenient));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(corpus.graph.edge_count()));
  std::filesystem::remove(path);
}
BENCHMARK(BM_LoadEdges)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Spearman(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0), 3.0);
  const alef::ScoreVector walk = alef::alef_rank(corpus.graph, alef::WalkConfig{});
  const alef::ScoreVector base = alef::in_degree_rank(corpus.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alef::spearman_correlation(walk, base));
  }
}
BENCHMARK(BM_Spearman)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GenerateCorpus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(corpus_of(state.range(0), 5.0));
  }
}
BENCHMARK(BM_GenerateCorpus)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
