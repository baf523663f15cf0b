#include "snip/indicators.hpp"

#include <algorithm>
#include <stdexcept>

namespace snip {

namespace {

struct ImpactCounts {
  std::uint64_t papers = 0;
  std::uint64_t reviews = 0;
  std::uint64_t cites = 0;
  std::uint64_t self_cites = 0;
};

ImpactCounts impact_counts(const CitationIndex& index, std::uint32_t source,
                           const WindowConfig& config) {
  ImpactCounts counts;
  const int citing_year = config.citing_year();
  for (std::uint32_t p : index.papers_of_journal(source, config.indicator_window())) {
    ++counts.papers;
    if (index.paper_is_review(p)) ++counts.reviews;
    for (const CitationIndex::Citer& c : index.citers_of(p)) {
      if (index.paper_year(c.paper) != citing_year) continue;
      counts.cites += c.multiplicity;
      if (index.paper_source(c.paper) == source) counts.self_cites += c.multiplicity;
    }
  }
  return counts;
}

struct FieldCounts {
  std::uint64_t total_refs = 0;     // dated refs inside the indicator window
  std::uint64_t resolved_refs = 0;  // the in-database part of total_refs
  std::uint64_t refs_to_journal = 0;
};

FieldCounts field_counts(const CitationIndex& index, const SubjectField& field,
                         std::uint32_t source, const WindowConfig& config) {
  FieldCounts counts;
  const YearRange window = config.indicator_window();
  for (std::uint32_t p : field.citing_papers) {
    counts.total_refs += index.refs_in_window(p, window);
    counts.resolved_refs += index.resolved_refs_in_window(p, window);
    counts.refs_to_journal += index.resolved_refs_to(p, source, window);
  }
  return counts;
}

}  // namespace

std::optional<double> raw_impact_per_paper(const CitationIndex& index,
                                           std::string_view source_id,
                                           const WindowConfig& config) {
  auto source = index.source_index(source_id);
  if (!source) return std::nullopt;
  ImpactCounts counts = impact_counts(index, *source, config);
  if (counts.papers == 0) return std::nullopt;
  return static_cast<double>(counts.cites) / static_cast<double>(counts.papers);
}

SubjectField delimit_subject_field(const CitationIndex& index,
                                   std::string_view source_id,
                                   const WindowConfig& config) {
  SubjectField field;
  field.source_id = std::string(source_id);
  if (auto source = index.source_index(source_id)) {
    field.citing_papers =
        index.citing_papers(*source, config.citing_year(), config.field_window());
  }
  return field;
}

std::optional<double> citation_potential(const CitationIndex& index,
                                         const SubjectField& field,
                                         const WindowConfig& config) {
  if (field.citing_papers.empty()) return std::nullopt;
  const YearRange window = config.indicator_window();
  std::uint64_t total = 0;
  for (std::uint32_t p : field.citing_papers) {
    total += index.refs_in_window(p, window);
  }
  return static_cast<double>(total) / static_cast<double>(field.size());
}

DcpResult database_citation_potential(const CitationIndex& index,
                                      const SubjectField& field,
                                      const WindowConfig& config) {
  if (field.citing_papers.empty()) return {};
  const YearRange window = config.indicator_window();
  std::uint64_t total = 0;
  std::uint64_t resolved = 0;
  for (std::uint32_t p : field.citing_papers) {
    total += index.refs_in_window(p, window);
    resolved += index.resolved_refs_in_window(p, window);
  }
  DcpResult result;
  result.dcp = static_cast<double>(resolved) / static_cast<double>(field.size());
  if (total > 0) {
    result.coverage = static_cast<double>(resolved) / static_cast<double>(total);
  }
  return result;
}

double median_dcp(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double relative_dcp(double dcp, double median) {
  if (median <= 0.0) throw std::invalid_argument("median citation potential must be positive");
  return dcp / median;
}

std::optional<double> snip_value(std::optional<double> rip, std::optional<double> rdcp) {
  if (!rip || !rdcp || *rdcp == 0.0) return std::nullopt;
  return *rip / *rdcp;
}

std::optional<double> self_citation_pct(const CitationIndex& index,
                                        std::string_view source_id,
                                        const WindowConfig& config) {
  auto source = index.source_index(source_id);
  if (!source) return std::nullopt;
  ImpactCounts counts = impact_counts(index, *source, config);
  if (counts.cites == 0) return std::nullopt;
  return 100.0 * static_cast<double>(counts.self_cites) /
         static_cast<double>(counts.cites);
}

std::optional<double> subfield_refs_to_journal_pct(const CitationIndex& index,
                                                   const SubjectField& field,
                                                   std::string_view source_id,
                                                   const WindowConfig& config) {
  auto source = index.source_index(source_id);
  if (!source) return std::nullopt;
  FieldCounts counts = field_counts(index, field, *source, config);
  if (counts.total_refs == 0) return std::nullopt;
  return 100.0 * static_cast<double>(counts.refs_to_journal) /
         static_cast<double>(counts.total_refs);
}

IndicatorReport compute_all(const Corpus& corpus, const WindowConfig& config) {
  CitationIndex index = build_index(erase_non_papers(corpus));
  return compute_all(index, config);
}

IndicatorReport compute_all(const CitationIndex& index, const WindowConfig& config) {
  IndicatorReport report;
  report.journals.reserve(index.source_count());

  for (std::uint32_t s = 0; s < index.source_count(); ++s) {
    JournalIndicators ji;
    ji.source_id = index.source_id(s);

    ImpactCounts impact = impact_counts(index, s, config);
    ji.n_papers = impact.papers;
    ji.cites = impact.cites;
    if (impact.papers > 0) {
      ji.pct_reviews = 100.0 * static_cast<double>(impact.reviews) /
                       static_cast<double>(impact.papers);
      ji.rip = static_cast<double>(impact.cites) / static_cast<double>(impact.papers);
    }
    if (impact.cites > 0) {
      ji.pct_self_cites = 100.0 * static_cast<double>(impact.self_cites) /
                          static_cast<double>(impact.cites);
    }

    SubjectField field;
    field.source_id = ji.source_id;
    field.citing_papers = index.citing_papers(s, config.citing_year(), config.field_window());
    ji.field_size = field.size();
    if (!field.citing_papers.empty()) {
      FieldCounts counts = field_counts(index, field, s, config);
      ji.citation_potential = static_cast<double>(counts.total_refs) /
                              static_cast<double>(field.size());
      ji.dcp = static_cast<double>(counts.resolved_refs) /
               static_cast<double>(field.size());
      if (counts.total_refs > 0) {
        ji.coverage = static_cast<double>(counts.resolved_refs) /
                      static_cast<double>(counts.total_refs);
        ji.pct_field_refs_to_journal = 100.0 *
                                       static_cast<double>(counts.refs_to_journal) /
                                       static_cast<double>(counts.total_refs);
      }
    }
    report.journals.push_back(std::move(ji));
  }

  std::vector<double> dcps;
  for (const JournalIndicators& ji : report.journals) {
    if (ji.dcp) dcps.push_back(*ji.dcp);
  }
  if (dcps.empty()) {
    throw std::runtime_error("no journal has a defined database citation potential");
  }
  report.summary.n_eligible = dcps.size();
  report.summary.median_dcp = median_dcp(std::move(dcps));

  const double median = report.summary.median_dcp;
  for (JournalIndicators& ji : report.journals) {
    if (ji.dcp && median > 0.0) {
      ji.rdcp = relative_dcp(*ji.dcp, median);
      ji.snip = snip_value(ji.rip, ji.rdcp);
    }
  }
  return report;
}

}  // namespace snip
