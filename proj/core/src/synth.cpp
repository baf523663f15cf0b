#include "snip/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace snip {

namespace {

void validate(const GeneratorSpec& spec) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (spec.n_fields < 1 || spec.n_fields > 99) fail("n_fields must be in 1..99");
  if (spec.journals_per_field < 1 || spec.journals_per_field > 99) {
    fail("journals_per_field must be in 1..99");
  }
  if (spec.first_year > spec.last_year) fail("first_year is after last_year");
  if (spec.first_year < 1900 || spec.last_year > 2100) {
    fail("years must stay within 1900..2100");
  }
  if (!(spec.papers_per_journal_year_mean > 0.0)) fail("papers mean must be positive");
  if (spec.refs_per_paper_mean.empty()) fail("refs_per_paper_mean is empty");
  for (double m : spec.refs_per_paper_mean) {
    if (!(m > 0.0)) fail("reference means must be positive");
  }
  for (double f : {spec.external_ref_fraction, spec.review_fraction,
                   spec.ineligible_fraction, spec.cross_field_fraction}) {
    if (!(f >= 0.0 && f <= 1.0)) fail("fractions must lie in [0, 1]");
  }
  if (spec.age_weights.empty() || spec.age_weights.size() > 10) {
    fail("age_weights needs 1..10 entries");
  }
  double sum = 0.0;
  for (double w : spec.age_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) fail("age weights must be finite and non-negative");
    sum += w;
  }
  if (!(sum > 0.0)) fail("age weights sum to zero");
}

}  // namespace

std::string synth_journal_id(int field, int journal_in_field) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "F%02dJ%02d", field, journal_in_field);
  return buf;
}

std::string synth_paper_id(std::uint64_t n) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "p%07llu", static_cast<unsigned long long>(n));
  return buf;
}

std::optional<int> synth_field_of(std::string_view source_id) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (source_id.size() != 6 || source_id[0] != 'F' || source_id[3] != 'J') {
    return std::nullopt;
  }
  if (!digit(source_id[1]) || !digit(source_id[2]) || !digit(source_id[4]) ||
      !digit(source_id[5])) {
    return std::nullopt;
  }
  return (source_id[1] - '0') * 10 + (source_id[2] - '0');
}

Corpus generate_corpus(const GeneratorSpec& spec) {
  validate(spec);

  std::mt19937_64 rng(spec.seed);
  const int n_years = spec.last_year - spec.first_year + 1;

  Corpus corpus;
  std::vector<int> field_of_paper;
  // Eligible paper indices per (field, publication year): the citable pool.
  std::vector<std::vector<std::size_t>> pool(
      static_cast<std::size_t>(spec.n_fields) * static_cast<std::size_t>(n_years));
  auto pool_at = [&](int field, int year) -> std::vector<std::size_t>& {
    return pool[static_cast<std::size_t>(field) * n_years + (year - spec.first_year)];
  };

  static constexpr const char* kOtherLabels[] = {"editorial", "letter", "note",
                                                 "correction"};
  std::uint64_t next_id = 0;
  int other_rotor = 0;

  std::poisson_distribution<int> paper_count(spec.papers_per_journal_year_mean);
  std::bernoulli_distribution draw_ineligible(spec.ineligible_fraction);
  std::bernoulli_distribution draw_review(spec.review_fraction);

  for (int f = 0; f < spec.n_fields; ++f) {
    for (int j = 0; j < spec.journals_per_field; ++j) {
      const std::string journal = synth_journal_id(f, j);
      corpus.source_registry.push_back(journal);
      for (int year = spec.first_year; year <= spec.last_year; ++year) {
        const int n = paper_count(rng);
        for (int k = 0; k < n; ++k) {
          PaperRecord rec;
          rec.paper_id = synth_paper_id(++next_id);
          rec.source_id = journal;
          rec.pub_year = year;
          if (draw_ineligible(rng)) {
            rec.doc_type = DocType::from_label(kOtherLabels[other_rotor++ % 4]);
          } else {
            rec.doc_type = DocType::from_label(draw_review(rng) ? "review" : "article");
          }
          if (rec.doc_type.eligible()) pool_at(f, year).push_back(corpus.papers.size());
          field_of_paper.push_back(f);
          corpus.papers.push_back(std::move(rec));
        }
      }
    }
  }
  // Field-major construction emits journal ids in lexicographic order already.

  std::bernoulli_distribution draw_external(spec.external_ref_fraction);
  std::bernoulli_distribution draw_cross(spec.cross_field_fraction);

  for (std::size_t i = 0; i < corpus.papers.size(); ++i) {
    PaperRecord& paper = corpus.papers[i];
    const int f = field_of_paper[i];
    const double mean =
        spec.refs_per_paper_mean[f % spec.refs_per_paper_mean.size()];
    const int n_refs = std::poisson_distribution<int>(mean)(rng);

    const int max_age = std::min<int>(static_cast<int>(spec.age_weights.size()),
                                      paper.pub_year - spec.first_year);
    if (max_age <= 0) continue;  // first cohort: nothing older to cite
    double weight_sum = 0.0;
    for (int a = 0; a < max_age; ++a) weight_sum += spec.age_weights[a];
    if (!(weight_sum > 0.0)) continue;
    std::discrete_distribution<int> draw_age(spec.age_weights.begin(),
                                             spec.age_weights.begin() + max_age);

    for (int r = 0; r < n_refs; ++r) {
      const int target_year = paper.pub_year - (draw_age(rng) + 1);
      ReferenceRecord ref;
      ref.year = target_year;
      if (!draw_external(rng)) {
        int tf = f;
        if (spec.n_fields > 1 && draw_cross(rng)) {
          const int d = std::uniform_int_distribution<int>(0, spec.n_fields - 2)(rng);
          tf = d >= f ? d + 1 : d;
        }
        const std::vector<std::size_t>& candidates = pool_at(tf, target_year);
        if (!candidates.empty()) {
          const std::size_t pick = std::uniform_int_distribution<std::size_t>(
              0, candidates.size() - 1)(rng);
          ref.paper_id = corpus.papers[candidates[pick]].paper_id;
        }
        // No candidate that year: the reference stays external.
      }
      paper.references.push_back(std::move(ref));
    }
  }
  return corpus;
}

}  // namespace snip
