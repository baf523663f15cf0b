#include "snip/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace snip {

namespace {

// Spells out the eligible kinds instead of calling DocType::eligible().
bool counts_as_paper(const PaperRecord& rec) {
  switch (rec.doc_type.kind) {
    case DocType::Kind::Article:
    case DocType::Kind::Review:
    case DocType::Kind::Proceedings:
      return true;
    case DocType::Kind::Other:
      return false;
  }
  return false;
}

bool in_window(int year, const YearRange& w) { return year >= w.first && year <= w.last; }

}  // namespace

IndicatorReport naive_oracle(const Corpus& corpus, const WindowConfig& config) {
  // Erase everything that is not a paper, then resolve ids against survivors.
  std::vector<const PaperRecord*> papers;
  for (const PaperRecord& rec : corpus.papers) {
    if (counts_as_paper(rec)) papers.push_back(&rec);
  }
  std::unordered_map<std::string, const PaperRecord*> by_id;
  for (const PaperRecord* p : papers) by_id.emplace(p->paper_id, p);

  for (const PaperRecord* p : papers) {
    if (!std::binary_search(corpus.source_registry.begin(),
                            corpus.source_registry.end(), p->source_id)) {
      throw std::invalid_argument("record source missing from the registry");
    }
  }

  const int citing_year = config.citing_year();
  const YearRange ind = config.indicator_window();
  const YearRange fld = config.field_window();

  auto resolve = [&](const ReferenceRecord& ref) -> const PaperRecord* {
    if (!ref.paper_id) return nullptr;
    auto it = by_id.find(*ref.paper_id);
    return it == by_id.end() ? nullptr : it->second;
  };

  IndicatorReport report;
  for (const std::string& journal : corpus.source_registry) {
    JournalIndicators ji;
    ji.source_id = journal;

    std::uint64_t n_papers = 0, reviews = 0;
    for (const PaperRecord* p : papers) {
      if (p->source_id != journal || !in_window(p->pub_year, ind)) continue;
      ++n_papers;
      if (p->doc_type.kind == DocType::Kind::Review) ++reviews;
    }

    std::uint64_t cites = 0, self_cites = 0;
    for (const PaperRecord* p : papers) {
      if (p->pub_year != citing_year) continue;
      for (const ReferenceRecord& ref : p->references) {
        const PaperRecord* target = resolve(ref);
        if (!target || target->source_id != journal || !in_window(target->pub_year, ind)) {
          continue;
        }
        ++cites;
        if (p->source_id == journal) ++self_cites;
      }
    }

    // The subject field: citing-year papers citing this journal's papers from
    // the field window, then their reference tallies over the indicator window.
    std::uint64_t field_size = 0;
    std::uint64_t total_refs = 0, resolved_refs = 0, refs_to_journal = 0;
    for (const PaperRecord* p : papers) {
      if (p->pub_year != citing_year) continue;
      bool member = false;
      for (const ReferenceRecord& ref : p->references) {
        const PaperRecord* target = resolve(ref);
        if (target && target->source_id == journal && in_window(target->pub_year, fld)) {
          member = true;
          break;
        }
      }
      if (!member) continue;
      ++field_size;
      for (const ReferenceRecord& ref : p->references) {
        const PaperRecord* target = resolve(ref);
        int cited_year = 0;
        if (target) {
          cited_year = target->pub_year;
        } else if (ref.year) {
          cited_year = *ref.year;
        } else {
          continue;  // undated and unresolved: outside every window
        }
        if (!in_window(cited_year, ind)) continue;
        ++total_refs;
        if (target) {
          ++resolved_refs;
          if (target->source_id == journal) ++refs_to_journal;
        }
      }
    }

    ji.n_papers = n_papers;
    ji.cites = cites;
    ji.field_size = field_size;
    if (n_papers > 0) {
      ji.pct_reviews = 100.0 * static_cast<double>(reviews) / static_cast<double>(n_papers);
      ji.rip = static_cast<double>(cites) / static_cast<double>(n_papers);
    }
    if (cites > 0) {
      ji.pct_self_cites =
          100.0 * static_cast<double>(self_cites) / static_cast<double>(cites);
    }
    if (field_size > 0) {
      ji.citation_potential =
          static_cast<double>(total_refs) / static_cast<double>(field_size);
      ji.dcp = static_cast<double>(resolved_refs) / static_cast<double>(field_size);
      if (total_refs > 0) {
        ji.coverage =
            static_cast<double>(resolved_refs) / static_cast<double>(total_refs);
        ji.pct_field_refs_to_journal = 100.0 * static_cast<double>(refs_to_journal) /
                                       static_cast<double>(total_refs);
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
  std::sort(dcps.begin(), dcps.end());
  const std::size_t n = dcps.size();
  const double median =
      n % 2 == 1 ? dcps[n / 2] : (dcps[n / 2 - 1] + dcps[n / 2]) / 2.0;
  report.summary.n_eligible = n;
  report.summary.median_dcp = median;

  for (JournalIndicators& ji : report.journals) {
    if (ji.dcp && median > 0.0) {
      ji.rdcp = *ji.dcp / median;
      if (ji.rip && *ji.rdcp != 0.0) ji.snip = *ji.rip / *ji.rdcp;
    }
  }
  return report;
}

}  // namespace snip
