#pragma once

#include <stdexcept>

namespace snip {

// Inclusive range of calendar years.
struct YearRange {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return year >= first && year <= last; }
  int length() const { return last - first + 1; }
  bool operator==(const YearRange&) const = default;
};

// Citing year plus the two cited-year windows used by the indicators.
// Both windows always end at the year before the citing year, so they are
// stored as lengths; a window of length L spans [citing_year - L, citing_year - 1].
// The indicator window (default 3 years) bounds the cited papers counted in
// impact and potential figures; the field window (default 10 years) bounds the
// cited papers that make a citing paper a member of a journal's subject field.
class WindowConfig {
 public:
  WindowConfig(int citing_year, int indicator_years = 3, int field_years = 10)
      : citing_year_(citing_year),
        indicator_years_(indicator_years),
        field_years_(field_years) {
    if (indicator_years < 1 || field_years < 1) {
      throw std::invalid_argument("window lengths must be at least one year");
    }
  }

  int citing_year() const { return citing_year_; }
  int indicator_years() const { return indicator_years_; }
  int field_years() const { return field_years_; }

  YearRange indicator_window() const {
    return {citing_year_ - indicator_years_, citing_year_ - 1};
  }
  YearRange field_window() const {
    return {citing_year_ - field_years_, citing_year_ - 1};
  }

  bool operator==(const WindowConfig&) const = default;

 private:
  int citing_year_;
  int indicator_years_;
  int field_years_;
};

}  // namespace snip
