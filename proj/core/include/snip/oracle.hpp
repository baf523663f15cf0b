#pragma once

#include "snip/corpus.hpp"
#include "snip/indicators.hpp"
#include "snip/windows.hpp"

namespace snip {

// Brute-force reference implementation of compute_all. Shares the corpus
// types with the engine and nothing else: eligibility, reference resolution,
// field delimitation and the median are all recounted here with plain
// exhaustive scans. Quadratic in corpus size; keep inputs to a few thousand
// papers. Same output contract and error behaviour as compute_all.
IndicatorReport naive_oracle(const Corpus& corpus, const WindowConfig& config);

}  // namespace snip
