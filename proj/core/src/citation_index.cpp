#include "snip/citation_index.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace snip {

namespace {

std::uint64_t source_year_key(std::uint32_t source, int year) {
  return (static_cast<std::uint64_t>(source) << 32) |
         static_cast<std::uint32_t>(year);
}

}  // namespace

CitationIndex CitationIndex::build(Corpus corpus) {
  CitationIndex index;

  // Canonical handle order: rank by paper id so every query answers the same
  // way no matter how the corpus file was ordered.
  std::sort(corpus.papers.begin(), corpus.papers.end(),
            [](const PaperRecord& a, const PaperRecord& b) {
              return a.paper_id < b.paper_id;
            });

  const std::size_t n = corpus.papers.size();
  index.ids_.reserve(n);
  index.paper_sources_.reserve(n);
  index.years_.reserve(n);
  index.is_review_.reserve(n);

  index.sources_ = corpus.source_registry;
  for (std::uint32_t s = 0; s < index.sources_.size(); ++s) {
    index.source_lookup_.emplace(index.sources_[s], s);
  }

  for (std::uint32_t p = 0; p < n; ++p) {
    const PaperRecord& rec = corpus.papers[p];
    if (!rec.doc_type.eligible()) {
      throw std::invalid_argument("corpus contains non-paper records; run erase_non_papers first");
    }
    auto src = index.source_lookup_.find(rec.source_id);
    if (src == index.source_lookup_.end()) {
      throw std::invalid_argument("source '" + rec.source_id + "' missing from registry");
    }
    index.ids_.push_back(rec.paper_id);
    index.paper_sources_.push_back(src->second);
    index.years_.push_back(rec.pub_year);
    index.is_review_.push_back(rec.doc_type.kind == DocType::Kind::Review);
    index.id_lookup_.emplace(rec.paper_id, p);
    index.by_source_year_[source_year_key(src->second, rec.pub_year)].push_back(p);
  }

  // Resolve references once, grouping duplicates into multiplicities.
  std::vector<std::map<std::uint32_t, std::uint32_t>> citers_acc(n);
  std::vector<std::vector<ReverseEdge>> reverse_acc(index.sources_.size());
  index.citer_offsets_.assign(n + 1, 0);
  index.dated_offsets_.assign(n + 1, 0);
  index.resolved_offsets_.assign(n + 1, 0);

  for (std::uint32_t p = 0; p < n; ++p) {
    const PaperRecord& rec = corpus.papers[p];
    std::map<int, std::uint32_t> dated;
    std::map<std::pair<std::uint32_t, int>, std::uint32_t> resolved;
    for (const ReferenceRecord& ref : rec.references) {
      std::optional<std::uint32_t> target;
      if (ref.paper_id) {
        if (auto it = index.id_lookup_.find(*ref.paper_id); it != index.id_lookup_.end()) {
          target = it->second;
        }
      }
      if (target) {
        const std::uint32_t t = *target;
        const int year = index.years_[t];
        ++citers_acc[t][p];
        ++dated[year];
        ++resolved[{index.paper_sources_[t], year}];
        ++index.resolved_total_;
      } else if (ref.year) {
        ++dated[*ref.year];
      }
      // A reference with neither a resolvable id nor a year cannot enter any
      // windowed count; it is dropped here.
    }
    for (const auto& [year, count] : dated) {
      index.dated_refs_.push_back({year, count});
    }
    index.dated_offsets_[p + 1] = static_cast<std::uint32_t>(index.dated_refs_.size());
    for (const auto& [key, count] : resolved) {
      index.resolved_refs_.push_back({key.first, key.second, count});
      reverse_acc[key.first].push_back({p, key.second, count});
    }
    index.resolved_offsets_[p + 1] = static_cast<std::uint32_t>(index.resolved_refs_.size());
  }

  for (std::uint32_t p = 0; p < n; ++p) {
    for (const auto& [citing, mult] : citers_acc[p]) {
      index.citers_.push_back({citing, mult});
    }
    index.citer_offsets_[p + 1] = static_cast<std::uint32_t>(index.citers_.size());
  }

  index.reverse_offsets_.assign(index.sources_.size() + 1, 0);
  for (std::uint32_t s = 0; s < index.sources_.size(); ++s) {
    auto& edges = reverse_acc[s];
    std::sort(edges.begin(), edges.end(), [](const ReverseEdge& a, const ReverseEdge& b) {
      return std::tie(a.citing_paper, a.cited_year) < std::tie(b.citing_paper, b.cited_year);
    });
    index.reverse_.insert(index.reverse_.end(), edges.begin(), edges.end());
    index.reverse_offsets_[s + 1] = static_cast<std::uint32_t>(index.reverse_.size());
  }

  for (auto& [key, papers] : index.by_source_year_) {
    std::sort(papers.begin(), papers.end());
  }
  return index;
}

std::optional<std::uint32_t> CitationIndex::paper_index(std::string_view paper_id) const {
  auto it = id_lookup_.find(std::string(paper_id));
  if (it == id_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> CitationIndex::source_index(std::string_view source_id) const {
  auto it = source_lookup_.find(std::string(source_id));
  if (it == source_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> CitationIndex::papers_of_journal(std::uint32_t source,
                                                            YearRange window) const {
  std::vector<std::uint32_t> papers;
  for (int year = window.first; year <= window.last; ++year) {
    auto it = by_source_year_.find(source_year_key(source, year));
    if (it == by_source_year_.end()) continue;
    papers.insert(papers.end(), it->second.begin(), it->second.end());
  }
  std::sort(papers.begin(), papers.end());
  return papers;
}

std::vector<std::uint32_t> CitationIndex::papers_of_journal(std::string_view source_id,
                                                            YearRange window) const {
  auto source = source_index(source_id);
  if (!source) return {};
  return papers_of_journal(*source, window);
}

std::span<const CitationIndex::Citer> CitationIndex::citers_of(std::uint32_t paper) const {
  return slice(citers_, citer_offsets_, paper);
}

std::uint64_t CitationIndex::citations_to(std::span<const std::uint32_t> targets,
                                          int citing_year) const {
  std::uint64_t total = 0;
  for (std::uint32_t t : targets) {
    for (const Citer& c : citers_of(t)) {
      if (years_[c.paper] == citing_year) total += c.multiplicity;
    }
  }
  return total;
}

std::vector<std::uint32_t> CitationIndex::citing_papers(std::uint32_t source,
                                                        int citing_year,
                                                        YearRange window) const {
  std::vector<std::uint32_t> papers;
  for (const ReverseEdge& e : slice(reverse_, reverse_offsets_, source)) {
    if (years_[e.citing_paper] != citing_year) continue;
    if (!window.contains(e.cited_year)) continue;
    papers.push_back(e.citing_paper);
  }
  std::sort(papers.begin(), papers.end());
  papers.erase(std::unique(papers.begin(), papers.end()), papers.end());
  return papers;
}

std::uint64_t CitationIndex::refs_in_window(std::uint32_t paper, YearRange window) const {
  std::uint64_t total = 0;
  for (const YearCount& yc : slice(dated_refs_, dated_offsets_, paper)) {
    if (window.contains(yc.year)) total += yc.count;
  }
  return total;
}

std::uint64_t CitationIndex::resolved_refs_in_window(std::uint32_t paper,
                                                     YearRange window) const {
  std::uint64_t total = 0;
  for (const SourceYearCount& syc : slice(resolved_refs_, resolved_offsets_, paper)) {
    if (window.contains(syc.year)) total += syc.count;
  }
  return total;
}

std::uint64_t CitationIndex::resolved_refs_to(std::uint32_t paper, std::uint32_t source,
                                              YearRange window) const {
  std::uint64_t total = 0;
  for (const SourceYearCount& syc : slice(resolved_refs_, resolved_offsets_, paper)) {
    if (syc.source == source && window.contains(syc.year)) total += syc.count;
  }
  return total;
}

CitationIndex build_index(Corpus corpus) { return CitationIndex::build(std::move(corpus)); }

}  // namespace snip
