#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "engelnq/report.hpp"

namespace engelnq::cli {

struct RunConfig {
  std::string subcommand; // build | engel-primes | gfp-table | count-bound |
                          // wreath3 | snf

  // build
  std::string presentation_file;
  std::string case_md; // "4,1,1,1,1,1,1"
  std::string dump_table_path;

  // engel-primes
  std::string dump_matrix_path;

  // gfp-table
  std::uint64_t p = 0;
  unsigned m = 0;         // 0 = preset for p
  unsigned cap_x = 0;     // 0 = preset
  unsigned max_class = 0; // 0 = preset

  // count-bound
  unsigned bound_m = 6;
  unsigned bound_cap_x = 4;

  // wreath3
  std::string wreath_action = "verify"; // verify | witness
  unsigned max_index = 6;
  unsigned weight_cap = 6;
  unsigned witness_k = 3;

  // snf
  std::string matrix_file;
  std::size_t snf_columns = 0; // 0 = max column + 1

  // common
  std::string output_path; // empty = stdout
  bool structured = false;
  unsigned threads = 0; // 0 = default
  unsigned verbosity = 0;
};

struct RunResult {
  int status = 0; // 0 ok, 1 usage error, 2 verified-property failure
  Json report;
};

RunResult run(const RunConfig &config);

/// Runs and prints the report (human or structured) to `out` or the
/// configured output path. Returns the exit status.
int run_main(const RunConfig &config, std::ostream &out);

} // namespace engelnq::cli
