#pragma once

// Shared corpora and helpers for the unit and acceptance suites.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "snip/corpus.hpp"
#include "snip/indicators.hpp"

namespace testutil {

// Six journals, citing year 2007. Covers reviews/proceedings eligibility, an
// erased editorial (c11), duplicate references (b4 cites a2 twice), dated and
// undated externals, self-citations, uncited journals (D), journals outside
// the indicator window (E) and journals with papers but no field (F). All
// expected indicator values are worked out by hand in the test files.
inline const char kHandCorpus[] =
    R"({"id":"a1","src":"A","yr":2004,"ty":"article","refs":[]}
{"id":"a2","src":"A","yr":2005,"ty":"article","refs":[]}
{"id":"a3","src":"A","yr":2006,"ty":"review","refs":[]}
{"id":"a4","src":"A","yr":2002,"ty":"article","refs":[]}
{"id":"a5","src":"A","yr":2007,"ty":"article","refs":[{"id":"a2"},{"id":"b1"},{"yr":2005},{"yr":1995},{"id":"c11","yr":2005}]}
{"id":"b1","src":"B","yr":2004,"ty":"article","refs":[]}
{"id":"b2","src":"B","yr":2005,"ty":"article","refs":[]}
{"id":"b3","src":"B","yr":1996,"ty":"article","refs":[]}
{"id":"b4","src":"B","yr":2007,"ty":"review","refs":[{"id":"a4"},{"id":"a2"},{"id":"a2"},{"src":"X","yr":2006},{"id":"b2"}]}
{"id":"b5","src":"B","yr":2006,"ty":"proceedings","refs":[]}
{"id":"c1","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"},{"id":"a3"}]}
{"id":"c2","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"},{"id":"a3"}]}
{"id":"c3","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"},{"id":"b1"},{"id":"b3"}]}
{"id":"c4","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"},{"yr":2004},{"yr":2004}]}
{"id":"c5","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c6","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c7","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c8","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c9","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c10","src":"C","yr":2007,"ty":"article","refs":[{"id":"c12"}]}
{"id":"c11","src":"C","yr":2005,"ty":"editorial","refs":[]}
{"id":"c12","src":"C","yr":2006,"ty":"article","refs":[]}
{"id":"c13","src":"C","yr":2004,"ty":"article","refs":[]}
{"id":"c14","src":"C","yr":2004,"ty":"article","refs":[]}
{"id":"d1","src":"D","yr":2005,"ty":"article","refs":[]}
{"id":"d2","src":"D","yr":2006,"ty":"article","refs":[]}
{"id":"d3","src":"D","yr":1995,"ty":"article","refs":[]}
{"id":"e1","src":"E","yr":2007,"ty":"article","refs":[{"yr":2005}]}
{"id":"e2","src":"E","yr":2007,"ty":"article","refs":[{"yr":2005}]}
{"id":"f1","src":"F","yr":2006,"ty":"article","refs":[{"id":"c12"}]}
)";

inline snip::Corpus parse_text(const std::string& text,
                               const std::vector<std::string>* registry = nullptr) {
  std::istringstream in(text);
  return snip::parse_corpus(in, registry);
}

inline snip::ReferenceRecord ref_id(std::string id) {
  snip::ReferenceRecord r;
  r.paper_id = std::move(id);
  return r;
}

inline snip::ReferenceRecord ref_year(int year) {
  snip::ReferenceRecord r;
  r.year = year;
  return r;
}

inline snip::PaperRecord make_paper(std::string id, std::string src, int year,
                                    std::string type = "article",
                                    std::vector<snip::ReferenceRecord> refs = {}) {
  snip::PaperRecord rec;
  rec.paper_id = std::move(id);
  rec.source_id = std::move(src);
  rec.pub_year = year;
  rec.doc_type = snip::DocType::from_label(type);
  rec.references = std::move(refs);
  return rec;
}

// Derives the registry from the records of a hand-built corpus.
inline void finalize(snip::Corpus& corpus) {
  corpus.source_registry.clear();
  for (const auto& rec : corpus.papers) corpus.source_registry.push_back(rec.source_id);
  std::sort(corpus.source_registry.begin(), corpus.source_registry.end());
  corpus.source_registry.erase(std::unique(corpus.source_registry.begin(),
                                           corpus.source_registry.end()),
                               corpus.source_registry.end());
}

// Journal J publishes one 2005 paper; five 2007 papers cite it and together
// hold (2,2,1,1,1) dated references inside 2004-2006. J's citation potential
// is exactly 7/5.
inline snip::Corpus figure_potential_corpus() {
  snip::Corpus corpus;
  corpus.papers.push_back(make_paper("j1", "J", 2005));
  corpus.papers.push_back(make_paper("p1", "P", 2007, "article", {ref_id("j1"), ref_year(2004)}));
  corpus.papers.push_back(make_paper("p2", "P", 2007, "article", {ref_id("j1"), ref_year(2005)}));
  corpus.papers.push_back(make_paper("p3", "P", 2007, "article", {ref_id("j1")}));
  corpus.papers.push_back(make_paper("p4", "P", 2007, "article", {ref_id("j1")}));
  corpus.papers.push_back(make_paper("p5", "P", 2007, "article", {ref_id("j1")}));
  finalize(corpus);
  return corpus;
}

// Journal Q's field is a single 2007 paper carrying 7 dated references in the
// window, 4 of them resolving in-database: dcp = 4, coverage = 4/7.
inline snip::Corpus figure_coverage_corpus() {
  snip::Corpus corpus;
  corpus.papers.push_back(make_paper("q1", "Q", 2005));
  corpus.papers.push_back(make_paper("r1", "R", 2004));
  corpus.papers.push_back(make_paper("r2", "R", 2005));
  corpus.papers.push_back(make_paper("r3", "R", 2006));
  corpus.papers.push_back(make_paper(
      "x1", "X", 2007, "article",
      {ref_id("q1"), ref_id("r1"), ref_id("r2"), ref_id("r3"), ref_year(2004),
       ref_year(2005), ref_year(2006)}));
  finalize(corpus);
  return corpus;
}

// Three one-paper journals whose fields have 100 members each and in-database
// windowed reference totals 286, 687 and 2221; every reference goes to the
// field's own journal, so the median dcp is exactly 687/100 and the relative
// dcps mirror the 0.42 / 1.00 / 3.23 ladder.
inline snip::Corpus three_field_corpus() {
  snip::Corpus corpus;
  const std::uint64_t totals[3] = {286, 687, 2221};
  for (int k = 0; k < 3; ++k) {
    const std::string journal = "J" + std::to_string(k + 1);
    const std::string paper = "j" + std::to_string(k + 1);
    corpus.papers.push_back(make_paper(paper, journal, 2005));
    const std::uint64_t base = totals[k] / 100;
    const std::uint64_t extra = totals[k] % 100;
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t n = base + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
      std::vector<snip::ReferenceRecord> refs(n, ref_id(paper));
      corpus.papers.push_back(make_paper(
          "cite" + std::to_string(k + 1) + "_" + std::to_string(i),
          "CITERS-" + std::to_string(k + 1), 2007, "article", std::move(refs)));
    }
  }
  finalize(corpus);
  return corpus;
}

// One journal with 100 papers in each year 2004-2006 (the "bigger journals"
// stratum) plus a single citing paper that keeps the median defined.
inline snip::Corpus big_journal_corpus() {
  snip::Corpus corpus;
  for (int year = 2004; year <= 2006; ++year) {
    for (int i = 0; i < 100; ++i) {
      corpus.papers.push_back(make_paper(
          "big" + std::to_string(year) + "_" + std::to_string(i), "BIG", year));
    }
  }
  corpus.papers.push_back(
      make_paper("o1", "OTHER", 2007, "article", {ref_id("big2005_0")}));
  finalize(corpus);
  return corpus;
}

// Largest absolute difference between two reports; infinity on any structural
// or definedness mismatch.
inline double opt_diff(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return std::numeric_limits<double>::infinity();
  if (!a) return 0.0;
  return std::abs(*a - *b);
}

inline double report_diff(const snip::IndicatorReport& a, const snip::IndicatorReport& b) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.journals.size() != b.journals.size()) return inf;
  if (a.summary.n_eligible != b.summary.n_eligible) return inf;
  double worst = std::abs(a.summary.median_dcp - b.summary.median_dcp);
  for (std::size_t i = 0; i < a.journals.size(); ++i) {
    const snip::JournalIndicators& x = a.journals[i];
    const snip::JournalIndicators& y = b.journals[i];
    if (x.source_id != y.source_id || x.n_papers != y.n_papers ||
        x.cites != y.cites || x.field_size != y.field_size) {
      return inf;
    }
    for (double d : {opt_diff(x.pct_reviews, y.pct_reviews), opt_diff(x.rip, y.rip),
                     opt_diff(x.citation_potential, y.citation_potential),
                     opt_diff(x.coverage, y.coverage), opt_diff(x.dcp, y.dcp),
                     opt_diff(x.rdcp, y.rdcp), opt_diff(x.snip, y.snip),
                     opt_diff(x.pct_self_cites, y.pct_self_cites),
                     opt_diff(x.pct_field_refs_to_journal, y.pct_field_refs_to_journal)}) {
      worst = std::max(worst, d);
    }
  }
  return worst;
}

inline const snip::JournalIndicators& journal_row(const snip::IndicatorReport& report,
                                                  const std::string& source_id) {
  for (const auto& ji : report.journals) {
    if (ji.source_id == source_id) return ji;
  }
  throw std::runtime_error("no row for source '" + source_id + "'");
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("snip-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace testutil
