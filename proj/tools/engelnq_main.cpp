#include <iostream>

#include <CLI11.hpp>

#include "engelnq/cli.hpp"
#include "engelnq/version.hpp"

int main(int argc, char **argv) {
  CLI::App app{"engelnq: graded nilpotent quotient engine for Engel Lie rings"};
  app.set_version_flag("--version", engelnq::kVersion);
  app.require_subcommand(1);

  engelnq::cli::RunConfig cfg;

  auto add_common = [&cfg](CLI::App *sub) {
    sub->add_option("-o,--out", cfg.output_path, "write the report to a file");
    sub->add_option("--format", cfg.structured,
                    "output format: human or structured")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, bool>{{"human", false}, {"structured", true}},
            CLI::ignore_case));
    sub->add_option("-t,--threads", cfg.threads,
                    "worker threads (default: ENGELNQ_THREADS or all cores)");
    sub->add_flag("-v,--verbose", cfg.verbosity, "verbosity");
  };

  auto *build = app.add_subcommand("build", "build a graded Lie ring");
  build->add_option("--file", cfg.presentation_file, "presentation file");
  build->add_option("--case", cfg.case_md,
                    "rational configuration, e.g. 4,1,1,1,1,1,1");
  build->add_option("--dump-table", cfg.dump_table_path,
                    "write the structure table to a file");
  add_common(build);

  auto *primes =
      app.add_subcommand("engel-primes", "exceptional primes of a case");
  primes->add_option("--case", cfg.case_md, "target multidegree, e.g. 6,1,1")
      ->required();
  primes->add_option("--dump-matrix", cfg.dump_matrix_path,
                     "write the relation matrix to a file");
  add_common(primes);

  auto *table = app.add_subcommand("gfp-table", "GF(p) Engel algebra summary");
  table->add_option("--p", cfg.p, "field characteristic (prime > 3)")
      ->required();
  table->add_option("--m", cfg.m, "number of commuting generators");
  table->add_option("--cap-x", cfg.cap_x, "cap on the degree in x");
  table->add_option("--max-class", cfg.max_class, "build limit");
  add_common(table);

  auto *bound = app.add_subcommand("count-bound", "Hall-word dimension bound");
  bound->add_option("--m", cfg.bound_m, "number of commuting generators");
  bound->add_option("--cap-x", cfg.bound_cap_x, "cap on the degree in x");
  add_common(bound);

  auto *wreath = app.add_subcommand(
      "wreath3", "characteristic-3 wreath product checks");
  auto *verify = wreath->add_subcommand("verify", "verify the Engel cases");
  verify->add_option("--max-index", cfg.max_index, "largest generator index");
  verify->add_option("--weight-cap", cfg.weight_cap, "monomial weight cap");
  add_common(verify);
  auto *witness =
      wreath->add_subcommand("witness", "non-nilpotency witness for Id(a_1)");
  witness->add_option("--k", cfg.witness_k, "lower central series depth");
  witness->add_option("--max-index", cfg.max_index, "largest generator index");
  add_common(witness);
  wreath->require_subcommand(1);

  auto *snf = app.add_subcommand("snf", "Smith normal form of a matrix dump");
  snf->add_option("--in", cfg.matrix_file, "matrix file (col:value pairs)")
      ->required();
  snf->add_option("--columns", cfg.snf_columns,
                  "column count (default: max column + 1)");
  add_common(snf);

  CLI11_PARSE(app, argc, argv);

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "wreath3")
    cfg.wreath_action =
        app.get_subcommand("wreath3")->get_subcommands().front()->get_name();

  return engelnq::cli::run_main(cfg, std::cout);
}
