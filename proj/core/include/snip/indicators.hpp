#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snip/citation_index.hpp"
#include "snip/corpus.hpp"
#include "snip/windows.hpp"

namespace snip {

// A journal's subject field: the papers published in the citing year that
// cite at least one of the journal's papers inside the field window.
struct SubjectField {
  std::string source_id;
  std::vector<std::uint32_t> citing_papers;  // index handles, ascending

  std::size_t size() const { return citing_papers.size(); }
};

// Full per-journal indicator set. Counts are always defined (zero is a
// measurement); ratio indicators are null when their precondition fails, and
// a null input always propagates to null, never to zero.
struct JournalIndicators {
  std::string source_id;
  std::uint64_t n_papers = 0;    // papers in the indicator window (A)
  std::uint64_t cites = 0;       // citations received in the citing year (C)
  std::uint64_t field_size = 0;  // papers in the subject field (m)
  std::optional<double> pct_reviews;
  std::optional<double> rip;                 // raw impact per paper, C/A
  std::optional<double> citation_potential;  // mean windowed refs per field paper (R)
  std::optional<double> coverage;            // in-database fraction of those refs (f)
  std::optional<double> dcp;                 // database citation potential, f*R
  std::optional<double> rdcp;                // dcp relative to the database median
  std::optional<double> snip;                // rip / rdcp
  std::optional<double> pct_self_cites;
  std::optional<double> pct_field_refs_to_journal;
};

struct DatabaseSummary {
  std::size_t n_eligible = 0;  // journals entering the median
  double median_dcp = 0.0;
};

struct IndicatorReport {
  std::vector<JournalIndicators> journals;  // sorted by source_id
  DatabaseSummary summary;
};

// Individual operations. "Undefined" results are nullopt; hard errors throw.
std::optional<double> raw_impact_per_paper(const CitationIndex& index,
                                           std::string_view source_id,
                                           const WindowConfig& config);
SubjectField delimit_subject_field(const CitationIndex& index,
                                   std::string_view source_id,
                                   const WindowConfig& config);
std::optional<double> citation_potential(const CitationIndex& index,
                                         const SubjectField& field,
                                         const WindowConfig& config);

struct DcpResult {
  std::optional<double> dcp;
  std::optional<double> coverage;
};
DcpResult database_citation_potential(const CitationIndex& index,
                                      const SubjectField& field,
                                      const WindowConfig& config);

// Sorted-middle median; an even count averages the two middle values.
// Throws std::invalid_argument on an empty list.
double median_dcp(std::vector<double> values);

// Throws std::invalid_argument when the median is not positive.
double relative_dcp(double dcp, double median);

std::optional<double> snip_value(std::optional<double> rip, std::optional<double> rdcp);

std::optional<double> self_citation_pct(const CitationIndex& index,
                                        std::string_view source_id,
                                        const WindowConfig& config);
std::optional<double> subfield_refs_to_journal_pct(const CitationIndex& index,
                                                   const SubjectField& field,
                                                   std::string_view source_id,
                                                   const WindowConfig& config);

// Erases non-papers, builds the index and evaluates every journal of the
// registry. Throws std::runtime_error when no journal has a defined database
// citation potential.
IndicatorReport compute_all(const Corpus& corpus, const WindowConfig& config);
IndicatorReport compute_all(const CitationIndex& index, const WindowConfig& config);

}  // namespace snip
