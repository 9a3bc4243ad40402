#pragma once

#include "gcensus/census.hpp"

#include <string>

namespace gcensus {

// Final census output: one row per group order with the labelled count and
// the exact unlabelled count xi * labelled / n!. Everything is integer; the
// division is checked and a remainder raises consistency_error.
struct census_report {
  int n = 0;
  census_mode mode = census_mode::graphs;
  int lambda = 0;

  struct row {
    std::uint64_t group_order = 0;
    std::uint64_t labelled = 0;
    std::uint64_t unlabelled = 0;

    friend bool operator==(const row&, const row&) = default;
  };

  std::vector<row> rows;  // ascending group_order
  std::uint64_t labelled_total = 0;
  std::uint64_t unlabelled_total = 0;
  std::uint64_t burnside_total = 0;

  friend bool operator==(const census_report&, const census_report&) = default;
};

census_report make_report(const census_accumulator& acc);

enum class report_format { table, csv, json };

// Deterministic renderings; two identical reports produce identical bytes.
// The JSON object is key-sorted; with_timestamp adds a "generated_at" field
// (off by default so runs stay byte-comparable).
std::string render_table(const census_report& r);
std::string render_csv(const census_report& r);
std::string render_json(const census_report& r, bool with_timestamp = false);
std::string render(const census_report& r, report_format f);

}  // namespace gcensus
