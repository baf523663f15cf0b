#include "snip/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string_view>

#include "snip/version.hpp"
#include "snip/windows.hpp"

namespace snip {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string cell(const std::optional<double>& value, int decimals = 2) {
  return value ? fixed(*value, decimals) : std::string();
}

std::string hex_digest(std::uint64_t digest) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

std::string range_str(const YearRange& range) {
  return std::to_string(range.first) + "-" + std::to_string(range.last);
}

std::optional<std::string> epoch_timestamp() {
  const char* env = std::getenv("SOURCE_DATE_EPOCH");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const long long seconds = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0') return std::nullopt;
  const std::time_t t = static_cast<std::time_t>(seconds);
  std::tm tm{};
  if (!gmtime_r(&t, &tm)) return std::nullopt;
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

WindowConfig make_config(int citing_year, int indicator_years, int field_years) {
  try {
    return WindowConfig(citing_year, indicator_years, field_years);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <typename Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file '" + path + "'");
  write(out);
  out.close();
  if (!out) throw DataError("error writing '" + path + "'");
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

RunManifest RunManifest::make() {
  RunManifest manifest;
  manifest.tool = std::string(kToolName) + " " + kToolVersion;
  manifest.timestamp = epoch_timestamp();
  return manifest;
}

void RunManifest::write(std::ostream& out) const {
  out << "# tool: " << tool << "\n";
  if (timestamp) out << "# generated_at: " << *timestamp << "\n";
  if (corpus_digest) out << "# corpus_digest: " << *corpus_digest << "\n";
  for (const auto& [key, value] : config) {
    out << "# " << key << ": " << value << "\n";
  }
}

IndicatorReport cmd_compute(const ComputeOptions& options) {
  const Corpus corpus = parse_corpus_file(options.corpus_path, options.registry_path);
  const WindowConfig config = make_config(
      options.citing_year, options.indicator_window_years, options.field_window_years);

  IndicatorReport report;
  try {
    report = compute_all(corpus, config);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  } catch (const DataError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }

  with_output(options.out_path, [&](std::ostream& out) {
    RunManifest manifest = RunManifest::make();
    manifest.corpus_digest = hex_digest(corpus_digest(corpus));
    manifest.config = {
        {"citing_year", std::to_string(config.citing_year())},
        {"indicator_window", range_str(config.indicator_window())},
        {"field_window", range_str(config.field_window())},
    };
    manifest.write(out);

    out << "source_id\tn_papers\tpct_reviews\trip\tcoverage_pct\tdcp\trdcp\tsnip"
           "\tpct_self_cites\tpct_subfield_refs_to_journal\n";
    for (const JournalIndicators& ji : report.journals) {
      std::optional<double> coverage_pct;
      if (ji.coverage) coverage_pct = 100.0 * *ji.coverage;
      out << ji.source_id << '\t' << ji.n_papers << '\t' << cell(ji.pct_reviews)
          << '\t' << cell(ji.rip) << '\t' << cell(coverage_pct) << '\t'
          << cell(ji.dcp) << '\t' << cell(ji.rdcp) << '\t' << cell(ji.snip) << '\t'
          << cell(ji.pct_self_cites) << '\t' << cell(ji.pct_field_refs_to_journal)
          << '\n';
    }
  });
  return report;
}

StatsResult cmd_stats(const StatsOptions& options) {
  if (options.indicator == "source_id") {
    throw UsageError("indicator 'source_id' is not numeric");
  }
  std::ifstream in(options.results_path);
  if (!in) throw DataError("cannot open results file '" + options.results_path + "'");

  std::vector<double> values;
  std::vector<std::string> header;
  std::size_t column = 0;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = split_tabs(line);
    if (!have_header) {
      header = std::move(fields);
      bool found = false;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == options.indicator) {
          column = i;
          found = true;
          break;
        }
      }
      if (!found) throw UsageError("unknown indicator '" + options.indicator + "'");
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(lineno) + ": malformed results row");
    }
    const std::string& text = fields[column];
    if (text.empty()) continue;  // null cell
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
      throw DataError("line " + std::to_string(lineno) + ": '" + text +
                      "' is not a number");
    }
    values.push_back(value);
  }
  if (!have_header) throw DataError("results file has no header row");
  if (values.empty()) {
    throw DataError("indicator '" + options.indicator + "' has no defined values");
  }

  StatsResult result;
  try {
    result.summary = distribution_summary(values);
    result.histogram = unit_histogram(values);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }

  with_output(options.out_path, [&](std::ostream& out) {
    RunManifest manifest = RunManifest::make();
    manifest.config = {{"indicator", options.indicator}};
    manifest.write(out);

    const DistributionSummary& s = result.summary;
    out << "n\tmean\tstddev\tskewness\tp25\tp50\tp75\tp90\tp99\n";
    out << s.n << '\t' << fixed(s.mean, 4) << '\t' << fixed(s.stddev, 4) << '\t'
        << fixed(s.skewness, 4) << '\t' << fixed(s.p25, 4) << '\t'
        << fixed(s.p50, 4) << '\t' << fixed(s.p75, 4) << '\t' << fixed(s.p90, 4)
        << '\t' << fixed(s.p99, 4) << '\n';
    out << "# histogram\n";
    out << "bin_mid\tcount\tpct\n";
    for (const HistogramBin& bin : result.histogram.bins) {
      out << fixed(bin.midpoint, 1) << '\t' << bin.count << '\t'
          << fixed(bin.pct, 2) << '\n';
    }
  });
  return result;
}

SensitivityReport cmd_sensitivity(const SensitivityOptions& options) {
  const Corpus corpus = parse_corpus_file(options.corpus_path, options.registry_path);
  const WindowConfig config = make_config(
      options.citing_year, options.indicator_window_years, options.field_window_years);
  VariantSpec variant;
  try {
    variant = VariantSpec::from_name(options.variant);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  SensitivityReport report = [&] {
    try {
      return run_sensitivity(corpus, config, variant);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    } catch (const std::runtime_error& e) {
      throw DataError(e.what());
    }
  }();

  with_output(options.out_path, [&](std::ostream& out) {
    RunManifest manifest = RunManifest::make();
    manifest.corpus_digest = hex_digest(corpus_digest(corpus));
    manifest.config = {
        {"citing_year", std::to_string(config.citing_year())},
        {"indicator_window", range_str(config.indicator_window())},
        {"field_window", range_str(config.field_window())},
        {"variant", std::string(variant.name())},
        {"variant_citing_year", std::to_string(report.variant_config.citing_year())},
        {"variant_indicator_window", range_str(report.variant_config.indicator_window())},
        {"variant_field_window", range_str(report.variant_config.field_window())},
    };
    manifest.write(out);

    out << "source_id\tbig\trip_default\trip_variant\trip_diff"
           "\tsnip_default\tsnip_variant\tsnip_diff\n";
    for (const JournalSensitivity& row : report.journals) {
      out << row.source_id << '\t' << (row.big ? 1 : 0) << '\t'
          << cell(row.rip_default) << '\t' << cell(row.rip_variant) << '\t'
          << cell(row.rip_diff) << '\t' << cell(row.snip_default) << '\t'
          << cell(row.snip_variant) << '\t' << cell(row.snip_diff) << '\n';
    }

    out << "# aggregates\n";
    out << "indicator\tstratum\tn\tmean\tmedian\n";
    auto aggregate_row = [&](const char* indicator, const char* stratum,
                             const DiffAggregate& agg) {
      out << indicator << '\t' << stratum << '\t' << agg.n << '\t'
          << cell(agg.mean) << '\t' << cell(agg.median) << '\n';
    };
    aggregate_row("rip", "all", report.rip_all);
    aggregate_row("rip", "big", report.rip_big);
    aggregate_row("snip", "all", report.snip_all);
    aggregate_row("snip", "big", report.snip_big);
  });
  return report;
}

Corpus cmd_generate(const GenerateOptions& options) {
  Corpus corpus;
  try {
    corpus = generate_corpus(options.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  with_output(options.out_path,
              [&](std::ostream& out) { serialize_corpus(corpus, out); });
  if (options.registry_out_path) {
    with_output(*options.registry_out_path, [&](std::ostream& out) {
      for (const std::string& source : corpus.source_registry) out << source << '\n';
    });
  }
  return corpus;
}

}  // namespace snip
