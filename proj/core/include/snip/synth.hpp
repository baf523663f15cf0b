#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snip/corpus.hpp"

namespace snip {

// Parameters for the synthetic corpus generator. The seed fully determines
// the output (within this implementation; the engine types behind the draws
// are stdlib distributions, so corpora are not portable across stdlibs).
struct GeneratorSpec {
  std::uint64_t seed = 1;

  int n_fields = 5;            // disjoint citation communities, at most 99
  int journals_per_field = 10; // at most 99
  int first_year = 1996;
  int last_year = 2007;

  // Mean of the Poisson paper count per journal and year.
  double papers_per_journal_year_mean = 8.0;

  // Mean references per paper, one entry per field (cycled when shorter).
  // This is a field's underlying citation potential.
  std::vector<double> refs_per_paper_mean = {10.0};

  // Fraction of references emitted without a resolvable target id; they
  // carry only a year. 0.2 leaves roughly 80% of references in-database.
  double external_ref_fraction = 0.20;

  double review_fraction = 0.10;      // reviews among eligible papers
  double ineligible_fraction = 0.0;   // editorials, letters, notes, corrections
  double cross_field_fraction = 0.0;  // internal refs aimed at another field

  // Relative weights for reference ages 1..N (N = size, at most 10). The
  // default decays geometrically, so recent papers are cited most.
  std::vector<double> age_weights = {1.0,    0.85,   0.7225, 0.6141, 0.5220,
                                     0.4437, 0.3771, 0.3206, 0.2725, 0.2316};
};

// Naming scheme: journals are "F<ff>J<jj>" (field-major, zero-padded), papers
// are "p<nnnnnnn>" in creation order, so insertion order equals sorted order.
std::string synth_journal_id(int field, int journal_in_field);
std::string synth_paper_id(std::uint64_t n);

// Field index encoded in a generated journal id; nullopt for foreign ids.
std::optional<int> synth_field_of(std::string_view source_id);

// Deterministic corpus synthesis. Papers cite uniformly at random within
// their own field (cross-field per spec), backwards in time per the age
// weights; reference targets are always eligible papers. The registry lists
// every generated journal, publishing or not. Throws std::invalid_argument
// on a degenerate spec.
Corpus generate_corpus(const GeneratorSpec& spec);

}  // namespace snip
