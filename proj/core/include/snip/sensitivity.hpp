#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snip/corpus.hpp"
#include "snip/windows.hpp"

namespace snip {

// Window variations measured against the default configuration.
enum class VariantKind {
  None,                  // rerun with the default windows (control)
  FieldWindowShort,      // field window shortened to the indicator window length
  IndicatorWindowShort,  // indicator window shortened to the two preceding years
  ShiftCitingYear,       // citing year moved back by one, both lengths kept
  Custom,                // explicit WindowConfig supplied by the caller
};

struct VariantSpec {
  VariantKind kind = VariantKind::None;
  std::optional<WindowConfig> custom;  // required iff kind == Custom

  // Accepts "none", "field-window-short", "indicator-window-short",
  // "shift-citing-year"; throws std::invalid_argument otherwise.
  static VariantSpec from_name(std::string_view name);
  std::string_view name() const;
};

// Derives the variant window configuration from the default one.
WindowConfig apply_variant(const WindowConfig& base, const VariantSpec& variant);

// |100 * (v - d) / ((v + d) / 2)|. Null when either input is null; 0 when both
// values are 0 (the formula itself is 0/0 there, but "absent in both runs"
// means nothing changed).
std::optional<double> symmetric_pct_diff(std::optional<double> variant_value,
                                         std::optional<double> default_value);

struct JournalSensitivity {
  std::string source_id;
  // At least 100 eligible papers in every year of the *default* indicator window.
  bool big = false;
  std::optional<double> rip_default;
  std::optional<double> rip_variant;
  std::optional<double> rip_diff;
  std::optional<double> snip_default;
  std::optional<double> snip_variant;
  std::optional<double> snip_diff;
};

// Mean and median of the defined diffs in one stratum.
struct DiffAggregate {
  std::size_t n = 0;
  std::optional<double> mean;
  std::optional<double> median;
};

struct SensitivityReport {
  WindowConfig default_config;
  WindowConfig variant_config;
  std::vector<JournalSensitivity> journals;  // sorted by source_id
  DiffAggregate rip_all;
  DiffAggregate rip_big;
  DiffAggregate snip_all;
  DiffAggregate snip_big;
};

// Runs compute_all under the default and variant configurations on the same
// citation index and summarizes the per-journal differences.
SensitivityReport run_sensitivity(const Corpus& corpus, const WindowConfig& config,
                                  const VariantSpec& variant);

}  // namespace snip
