#include "snip/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "snip/citation_index.hpp"
#include "snip/indicators.hpp"
#include "snip/stats.hpp"

namespace snip {

VariantSpec VariantSpec::from_name(std::string_view name) {
  if (name == "none") return {VariantKind::None, std::nullopt};
  if (name == "field-window-short") return {VariantKind::FieldWindowShort, std::nullopt};
  if (name == "indicator-window-short") return {VariantKind::IndicatorWindowShort, std::nullopt};
  if (name == "shift-citing-year") return {VariantKind::ShiftCitingYear, std::nullopt};
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

std::string_view VariantSpec::name() const {
  switch (kind) {
    case VariantKind::None: return "none";
    case VariantKind::FieldWindowShort: return "field-window-short";
    case VariantKind::IndicatorWindowShort: return "indicator-window-short";
    case VariantKind::ShiftCitingYear: return "shift-citing-year";
    case VariantKind::Custom: return "custom";
  }
  return "none";
}

WindowConfig apply_variant(const WindowConfig& base, const VariantSpec& variant) {
  switch (variant.kind) {
    case VariantKind::None:
      return base;
    case VariantKind::FieldWindowShort:
      return {base.citing_year(), base.indicator_years(), base.indicator_years()};
    case VariantKind::IndicatorWindowShort:
      return {base.citing_year(), 2, base.field_years()};
    case VariantKind::ShiftCitingYear:
      return {base.citing_year() - 1, base.indicator_years(), base.field_years()};
    case VariantKind::Custom:
      if (!variant.custom) {
        throw std::invalid_argument("custom variant without a window configuration");
      }
      return *variant.custom;
  }
  throw std::invalid_argument("unknown variant kind");
}

std::optional<double> symmetric_pct_diff(std::optional<double> variant_value,
                                         std::optional<double> default_value) {
  if (!variant_value || !default_value) return std::nullopt;
  const double v = *variant_value;
  const double d = *default_value;
  if (v == 0.0 && d == 0.0) return 0.0;
  return std::abs(100.0 * (v - d) / ((v + d) / 2.0));
}

namespace {

DiffAggregate aggregate_diffs(std::vector<double> diffs) {
  DiffAggregate agg;
  agg.n = diffs.size();
  if (diffs.empty()) return agg;
  double sum = 0.0;
  for (double d : diffs) sum += d;
  agg.mean = sum / static_cast<double>(diffs.size());
  agg.median = median(std::move(diffs));
  return agg;
}

bool is_big(const CitationIndex& index, std::string_view source_id,
            const WindowConfig& config) {
  const YearRange window = config.indicator_window();
  for (int year = window.first; year <= window.last; ++year) {
    if (index.papers_of_journal(source_id, {year, year}).size() < 100) return false;
  }
  return true;
}

}  // namespace

SensitivityReport run_sensitivity(const Corpus& corpus, const WindowConfig& config,
                                  const VariantSpec& variant) {
  const Corpus papers_only = erase_non_papers(corpus);
  const CitationIndex index = CitationIndex::build(papers_only);
  const WindowConfig variant_config = apply_variant(config, variant);

  const IndicatorReport base = compute_all(index, config);
  const IndicatorReport varied = compute_all(index, variant_config);

  SensitivityReport report{config, variant_config, {}, {}, {}, {}, {}};
  std::vector<double> rip_all, rip_big, snip_all, snip_big;

  // compute_all sorts journals by source_id, and both runs share one index,
  // so the two reports line up row for row.
  for (std::size_t i = 0; i < base.journals.size(); ++i) {
    const JournalIndicators& d = base.journals[i];
    const JournalIndicators& v = varied.journals[i];

    JournalSensitivity row;
    row.source_id = d.source_id;
    row.big = is_big(index, d.source_id, config);
    row.rip_default = d.rip;
    row.rip_variant = v.rip;
    row.rip_diff = symmetric_pct_diff(v.rip, d.rip);
    row.snip_default = d.snip;
    row.snip_variant = v.snip;
    row.snip_diff = symmetric_pct_diff(v.snip, d.snip);

    if (row.rip_diff) {
      rip_all.push_back(*row.rip_diff);
      if (row.big) rip_big.push_back(*row.rip_diff);
    }
    if (row.snip_diff) {
      snip_all.push_back(*row.snip_diff);
      if (row.big) snip_big.push_back(*row.snip_diff);
    }
    report.journals.push_back(std::move(row));
  }

  report.rip_all = aggregate_diffs(std::move(rip_all));
  report.rip_big = aggregate_diffs(std::move(rip_big));
  report.snip_all = aggregate_diffs(std::move(snip_all));
  report.snip_big = aggregate_diffs(std::move(snip_big));
  return report;
}

}  // namespace snip
