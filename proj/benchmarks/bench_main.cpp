#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "snip/citation_index.hpp"
#include "snip/corpus.hpp"
#include "snip/indicators.hpp"
#include "snip/oracle.hpp"
#include "snip/synth.hpp"
#include "snip/windows.hpp"

namespace {

// ~5k papers across 50 journals, the scale the tool is meant for.
const snip::Corpus& bench_corpus() {
  static const snip::Corpus corpus = [] {
    snip::GeneratorSpec spec;
    spec.seed = 7;
    spec.ineligible_fraction = 0.05;
    return snip::generate_corpus(spec);
  }();
  return corpus;
}

const snip::CitationIndex& bench_index() {
  static const snip::CitationIndex index =
      snip::CitationIndex::build(snip::erase_non_papers(bench_corpus()));
  return index;
}

void BM_ParseCorpus(benchmark::State& state) {
  const std::string text = snip::serialize_corpus(bench_corpus());
  for (auto _ : state) {
    std::istringstream in(text);
    snip::Corpus corpus = snip::parse_corpus(in);
    benchmark::DoNotOptimize(corpus);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseCorpus);

void BM_BuildIndex(benchmark::State& state) {
  const snip::Corpus erased = snip::erase_non_papers(bench_corpus());
  for (auto _ : state) {
    snip::CitationIndex index = snip::CitationIndex::build(erased);
    benchmark::DoNotOptimize(index);
  }
}
BENCHMARK(BM_BuildIndex);

void BM_ComputeAll(benchmark::State& state) {
  const snip::CitationIndex& index = bench_index();
  const snip::WindowConfig config(2007);
  for (auto _ : state) {
    snip::IndicatorReport report = snip::compute_all(index, config);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ComputeAll);

void BM_NaiveOracle(benchmark::State& state) {
  const snip::Corpus& corpus = bench_corpus();
  const snip::WindowConfig config(2007);
  for (auto _ : state) {
    snip::IndicatorReport report = snip::naive_oracle(corpus, config);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_NaiveOracle);

}  // namespace

BENCHMARK_MAIN();
