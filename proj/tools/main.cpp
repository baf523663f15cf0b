#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "snip/commands.hpp"
#include "snip/corpus.hpp"
#include "snip/version.hpp"

namespace {

std::optional<std::string> nonempty(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"journal citation impact indicators over line-delimited corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(snip::kToolName) + " " + snip::kToolVersion);

  snip::ComputeOptions compute;
  std::string compute_registry;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "compute the journal indicator table");
  compute_cmd->add_option("--corpus", compute.corpus_path, "corpus file, one JSON record per line")
      ->required();
  compute_cmd->add_option("--registry", compute_registry,
                          "source registry file, one source id per line");
  compute_cmd->add_option("--citing-year", compute.citing_year, "the fixed citing year")
      ->required();
  compute_cmd
      ->add_option("--indicator-window", compute.indicator_window_years,
                   "cited window length in years")
      ->capture_default_str();
  compute_cmd
      ->add_option("--field-window", compute.field_window_years,
                   "field window length in years")
      ->capture_default_str();
  compute_cmd->add_option("--out", compute.out_path, "output file (default stdout)");

  snip::StatsOptions stats;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "summarize one indicator column of a report");
  stats_cmd->add_option("--results", stats.results_path, "report produced by compute")
      ->required();
  stats_cmd->add_option("--indicator", stats.indicator, "column to summarize")
      ->required();
  stats_cmd->add_option("--out", stats.out_path, "output file (default stdout)");

  snip::SensitivityOptions sensitivity;
  std::string sensitivity_registry;
  CLI::App* sensitivity_cmd = app.add_subcommand(
      "sensitivity", "compare indicators under a window variation");
  sensitivity_cmd
      ->add_option("--corpus", sensitivity.corpus_path, "corpus file, one JSON record per line")
      ->required();
  sensitivity_cmd->add_option("--registry", sensitivity_registry,
                              "source registry file, one source id per line");
  sensitivity_cmd
      ->add_option("--citing-year", sensitivity.citing_year, "the fixed citing year")
      ->required();
  sensitivity_cmd
      ->add_option("--indicator-window", sensitivity.indicator_window_years,
                   "cited window length in years")
      ->capture_default_str();
  sensitivity_cmd
      ->add_option("--field-window", sensitivity.field_window_years,
                   "field window length in years")
      ->capture_default_str();
  sensitivity_cmd
      ->add_option("--variant", sensitivity.variant,
                   "none, field-window-short, indicator-window-short or shift-citing-year")
      ->capture_default_str();
  sensitivity_cmd->add_option("--out", sensitivity.out_path, "output file (default stdout)");

  snip::GenerateOptions generate;
  std::string generate_registry_out;
  double coverage = 0.8;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "write a deterministic synthetic corpus");
  generate_cmd->add_option("--out", generate.out_path, "corpus output file (default stdout)");
  generate_cmd->add_option("--registry-out", generate_registry_out,
                           "also write the full source registry here");
  generate_cmd->add_option("--seed", generate.spec.seed, "random seed")
      ->capture_default_str();
  generate_cmd->add_option("--fields", generate.spec.n_fields, "number of fields")
      ->capture_default_str();
  generate_cmd
      ->add_option("--journals-per-field", generate.spec.journals_per_field,
                   "journals per field")
      ->capture_default_str();
  generate_cmd->add_option("--first-year", generate.spec.first_year, "first publication year")
      ->capture_default_str();
  generate_cmd->add_option("--last-year", generate.spec.last_year, "last publication year")
      ->capture_default_str();
  generate_cmd
      ->add_option("--papers-mean", generate.spec.papers_per_journal_year_mean,
                   "mean papers per journal and year")
      ->capture_default_str();
  generate_cmd
      ->add_option("--refs-mean", generate.spec.refs_per_paper_mean,
                   "mean references per paper, one value per field (cycled)")
      ->delimiter(',');
  generate_cmd
      ->add_option("--coverage", coverage,
                   "share of references kept in-database (rest become external)")
      ->capture_default_str();
  generate_cmd
      ->add_option("--review-fraction", generate.spec.review_fraction,
                   "share of reviews among papers")
      ->capture_default_str();
  generate_cmd
      ->add_option("--ineligible-fraction", generate.spec.ineligible_fraction,
                   "share of non-paper records")
      ->capture_default_str();
  generate_cmd
      ->add_option("--cross-field-fraction", generate.spec.cross_field_fraction,
                   "share of internal references aimed at another field")
      ->capture_default_str();
  generate_cmd
      ->add_option("--age-weights", generate.spec.age_weights,
                   "relative weights for reference ages 1..n (n <= 10)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*compute_cmd) {
      compute.registry_path = nonempty(compute_registry);
      snip::cmd_compute(compute);
    } else if (*stats_cmd) {
      snip::cmd_stats(stats);
    } else if (*sensitivity_cmd) {
      sensitivity.registry_path = nonempty(sensitivity_registry);
      snip::cmd_sensitivity(sensitivity);
    } else if (*generate_cmd) {
      generate.spec.external_ref_fraction = 1.0 - coverage;
      generate.registry_out_path = nonempty(generate_registry_out);
      snip::cmd_generate(generate);
    }
  } catch (const snip::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const snip::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const snip::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
