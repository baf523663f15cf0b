#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snip/corpus.hpp"
#include "snip/windows.hpp"

namespace snip {

// Frozen lookup structure over an erased corpus. Reference targets are
// resolved once at build time; afterwards every query is a pure function of
// the index, so concurrent readers are safe.
//
// Papers and sources are handled through dense indices (build order for
// papers, sorted registry order for sources).
class CitationIndex {
 public:
  struct Citer {
    std::uint32_t paper;         // citing paper
    std::uint32_t multiplicity;  // duplicate reference entries each count
  };

  // Pre: the corpus has been through erase_non_papers. Throws
  // std::invalid_argument when an ineligible record is still present.
  // Handles are assigned in paper-id order, so two corpora holding the same
  // records answer every query identically regardless of record order.
  static CitationIndex build(Corpus corpus);

  std::size_t paper_count() const { return ids_.size(); }
  std::size_t source_count() const { return sources_.size(); }

  std::optional<std::uint32_t> paper_index(std::string_view paper_id) const;
  std::optional<std::uint32_t> source_index(std::string_view source_id) const;
  const std::string& paper_id(std::uint32_t paper) const { return ids_[paper]; }
  const std::string& source_id(std::uint32_t source) const { return sources_[source]; }
  const std::vector<std::string>& sources() const { return sources_; }

  int paper_year(std::uint32_t paper) const { return years_[paper]; }
  std::uint32_t paper_source(std::uint32_t paper) const { return paper_sources_[paper]; }
  bool paper_is_review(std::uint32_t paper) const { return is_review_[paper]; }

  // Papers of one source with pub_year inside the window, ascending indices.
  // An unknown source yields an empty set.
  std::vector<std::uint32_t> papers_of_journal(std::uint32_t source, YearRange window) const;
  std::vector<std::uint32_t> papers_of_journal(std::string_view source_id, YearRange window) const;

  std::span<const Citer> citers_of(std::uint32_t paper) const;

  // Total multiplicity of resolved references from papers published in
  // citing_year into the target set. Self-citations included.
  std::uint64_t citations_to(std::span<const std::uint32_t> targets, int citing_year) const;

  // Papers published in citing_year holding at least one resolved reference
  // to a paper of `source` with pub_year inside the window; ascending, unique.
  std::vector<std::uint32_t> citing_papers(std::uint32_t source, int citing_year,
                                           YearRange window) const;

  // Per-paper reference tallies. "dated" references are those with a known
  // target year: every resolved reference plus unresolved ones carrying a
  // year. Only resolved references count as in-database.
  std::uint64_t refs_in_window(std::uint32_t paper, YearRange window) const;
  std::uint64_t resolved_refs_in_window(std::uint32_t paper, YearRange window) const;
  std::uint64_t resolved_refs_to(std::uint32_t paper, std::uint32_t source,
                                 YearRange window) const;

  std::uint64_t resolved_reference_count() const { return resolved_total_; }

 private:
  struct YearCount {
    int year;
    std::uint32_t count;
  };
  struct SourceYearCount {
    std::uint32_t source;
    int year;
    std::uint32_t count;
  };
  struct ReverseEdge {
    std::uint32_t citing_paper;
    int cited_year;
    std::uint32_t count;
  };

  template <typename T>
  std::span<const T> slice(const std::vector<T>& items,
                           const std::vector<std::uint32_t>& offsets,
                           std::uint32_t i) const {
    return {items.data() + offsets[i], items.data() + offsets[i + 1]};
  }

  std::vector<std::string> ids_;
  std::vector<std::uint32_t> paper_sources_;
  std::vector<int> years_;
  std::vector<bool> is_review_;
  std::unordered_map<std::string, std::uint32_t> id_lookup_;

  std::vector<std::string> sources_;  // sorted registry
  std::unordered_map<std::string, std::uint32_t> source_lookup_;

  // (source, year) -> papers
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_source_year_;

  // CSR blocks, one slice per paper.
  std::vector<Citer> citers_;
  std::vector<std::uint32_t> citer_offsets_;
  std::vector<YearCount> dated_refs_;
  std::vector<std::uint32_t> dated_offsets_;
  std::vector<SourceYearCount> resolved_refs_;
  std::vector<std::uint32_t> resolved_offsets_;

  // CSR, one slice per source: resolved references into that source.
  std::vector<ReverseEdge> reverse_;
  std::vector<std::uint32_t> reverse_offsets_;

  std::uint64_t resolved_total_ = 0;
};

CitationIndex build_index(Corpus corpus);

}  // namespace snip
