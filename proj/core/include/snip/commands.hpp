#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snip/corpus.hpp"
#include "snip/indicators.hpp"
#include "snip/sensitivity.hpp"
#include "snip/stats.hpp"
#include "snip/synth.hpp"

namespace snip {

// Bad flags or arguments; the driver exits 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unusable input data; the driver exits 2 (ParseError maps there as well).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Report header, one "# key: value" line per entry. The timestamp is taken
// from SOURCE_DATE_EPOCH and omitted when that variable is unset, so default
// runs stay byte-identical.
struct RunManifest {
  std::string tool;
  std::optional<std::string> timestamp;
  std::optional<std::string> corpus_digest;  // 16 hex digits
  std::vector<std::pair<std::string, std::string>> config;

  static RunManifest make();
  void write(std::ostream& out) const;
};

struct ComputeOptions {
  std::string corpus_path;
  std::optional<std::string> registry_path;
  int citing_year = 0;
  int indicator_window_years = 3;
  int field_window_years = 10;
  std::string out_path;  // empty = stdout
};

struct StatsOptions {
  std::string results_path;  // a cmd_compute report
  std::string indicator;     // column name
  std::string out_path;
};

struct SensitivityOptions {
  std::string corpus_path;
  std::optional<std::string> registry_path;
  int citing_year = 0;
  int indicator_window_years = 3;
  int field_window_years = 10;
  std::string variant = "none";
  std::string out_path;
};

struct GenerateOptions {
  GeneratorSpec spec;
  std::string out_path;  // pure corpus JSONL, no manifest
  std::optional<std::string> registry_out_path;
};

struct StatsResult {
  DistributionSummary summary;
  Histogram histogram;
};

// Each command writes its report and returns the underlying values.
IndicatorReport cmd_compute(const ComputeOptions& options);
StatsResult cmd_stats(const StatsOptions& options);
SensitivityReport cmd_sensitivity(const SensitivityOptions& options);
Corpus cmd_generate(const GenerateOptions& options);

}  // namespace snip
