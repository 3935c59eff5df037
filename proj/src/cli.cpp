#include "engelnq/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "engelnq/engel.hpp"
#include "engelnq/hall.hpp"
#include "engelnq/nq_build.hpp"
#include "engelnq/snf.hpp"
#include "engelnq/version.hpp"
#include "engelnq/wreath3.hpp"

namespace engelnq::cli {

namespace {

MultiDegree parse_md(const std::string &s) {
  std::vector<std::uint16_t> exps;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty())
        throw domain_error("malformed multidegree: " + s);
      exps.push_back(static_cast<std::uint16_t>(std::stoul(cur)));
      cur.clear();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else {
      throw domain_error("malformed multidegree: " + s);
    }
  }
  if (exps.empty())
    throw domain_error("malformed multidegree: " + s);
  return MultiDegree(std::move(exps));
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw domain_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string decimal(const mpz_class &z) { return z.get_str(); }

Json decimal_list(const std::vector<mpz_class> &zs) {
  Json arr = Json::array();
  for (const auto &z : zs)
    arr.push_back(decimal(z));
  return arr;
}

void dump_matrix(const std::string &path,
                 const engelgen::RelationMatrix &matrix) {
  std::ofstream out(path);
  if (!out)
    throw domain_error("cannot write " + path);
  for (const auto &row : matrix.rows) {
    bool first = true;
    for (const auto &[col, v] : row) {
      if (!first)
        out << ' ';
      out << col << ':' << v.get_str();
      first = false;
    }
    out << '\n';
  }
}

std::vector<IntRow> read_matrix(const std::string &text) {
  std::vector<IntRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    IntRow row;
    while (ls >> tok) {
      if (tok[0] == '#')
        break;
      auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        throw parse_error(line_no, 1, "expected col:value, got '" + tok + "'");
      try {
        std::uint32_t col =
            static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon)));
        mpz_class v(tok.substr(colon + 1));
        if (v != 0)
          row.emplace_back(col, std::move(v));
      } catch (const std::exception &) {
        throw parse_error(line_no, 1, "expected col:value, got '" + tok + "'");
      }
    }
    std::sort(row.begin(), row.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k].first == row[k + 1].first)
        throw parse_error(line_no, 1, "duplicate column in row");
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  return rows;
}

template <class Ring>
void describe_algebra(Json &result,
                      const nqcore::GradedLieAlgebra<Ring> &A) {
  result["dimension"] = A.dimension();
  result["class"] = A.nilpotency_class();
  Json weights = Json::array();
  for (unsigned w = 1; w <= A.nilpotency_class(); ++w)
    weights.push_back(A.weight_layer(w).size());
  result["dimension_by_weight"] = weights;
  result["max_a_entries"] = A.max_a_entries();
  result["max_x_entries"] = A.max_x_entries();
  if constexpr (!Ring::kIsPrimeField)
    result["structure_constants_integral"] = A.structure_constants_integral();
}

RunResult do_build(const RunConfig &config) {
  nqcore::Presentation pres;
  std::string source, text;
  if (!config.presentation_file.empty()) {
    text = read_file(config.presentation_file);
    source = config.presentation_file;
    pres = nqcore::Presentation::parse(text);
  } else if (!config.case_md.empty()) {
    pres = nqcore::Presentation::rational_case(parse_md(config.case_md));
    text = pres.canonical_text();
    source = "case " + config.case_md;
  } else {
    throw domain_error("build needs --file or --case");
  }

  RunResult rr;
  rr.report = make_report("build", source, text);
  Json &result = rr.report["result"];
  if (pres.ring == nqcore::RingSpec::Rationals)
    result["ring"] = "Q";
  else
    result["ring"] = "GF(" + std::to_string(pres.p) + ")";
  result["generators"] = pres.gen_names;
  result["engel_mode"] = nqcore::engel_mode_name(pres.engel.mode);

  auto algebra = nqcore::build(pres, config.threads);
  std::visit(
      [&](const auto &A) {
        describe_algebra(result, A);
        if (!config.dump_table_path.empty()) {
          std::ofstream out(config.dump_table_path);
          if (!out)
            throw domain_error("cannot write " + config.dump_table_path);
          A.export_table(out);
          result["table_dump"] = config.dump_table_path;
        }
      },
      algebra);
  return rr;
}

RunResult do_engel_primes(const RunConfig &config) {
  if (config.case_md.empty())
    throw domain_error("engel-primes needs --case");
  MultiDegree target = parse_md(config.case_md);

  engelgen::ExperimentCase c;
  bool known = false;
  if (auto found = engelgen::find_case(target)) {
    c = *found;
    known = true;
  } else {
    c.target = target;
  }

  RunResult rr;
  rr.report = make_report("engel-primes", "case " + config.case_md,
                          "engel-primes " + target.str());
  auto rep = engelgen::exceptional_primes(c, config.threads);

  if (!config.dump_matrix_path.empty()) {
    auto pres = nqcore::Presentation::rational_case(target);
    auto A = nqcore::build_rational(pres, config.threads);
    auto matrix = engelgen::relation_rows(A, target, config.threads);
    dump_matrix(config.dump_matrix_path, matrix);
    rr.report["result"]["matrix_dump"] = config.dump_matrix_path;
  }

  Json &result = rr.report["result"];
  result["target"] = rep.target.str();
  result["dimension"] = rep.dimension;
  result["class"] = rep.algebra_class;
  result["columns"] = rep.columns;
  result["instances"] = rep.instances;
  result["rows"] = rep.rows;
  result["rank"] = rep.rank;
  result["full_rank"] = rep.full_rank;
  result["divisors"] = decimal_list(rep.divisors);
  result["primes"] = decimal_list(rep.primes);
  if (known) {
    result["expected_primes"] = decimal_list(rep.expected_primes);
    result["within_expected"] = rep.within_expected;
    if (!rep.within_expected)
      rr.status = 2;
  }
  result["wall_seconds"] = rep.wall_seconds;
  return rr;
}

RunResult do_gfp_table(const RunConfig &config) {
  if (config.p == 0)
    throw domain_error("gfp-table needs --p");
  auto preset = engelgen::gfp_preset(config.p);
  unsigned m = config.m ? config.m : preset.m;
  unsigned cap_x = config.cap_x ? config.cap_x : preset.cap_x;
  unsigned max_class = config.max_class ? config.max_class : preset.max_class;

  RunResult rr;
  std::string desc = "p=" + std::to_string(config.p) +
                     " m=" + std::to_string(m) +
                     " cap_x=" + std::to_string(cap_x) +
                     " maxclass=" + std::to_string(max_class);
  rr.report = make_report("gfp-table", desc, "gfp-table " + desc);
  auto row = engelgen::gfp_table_row(config.p, m, cap_x, max_class,
                                     config.threads);
  Json &result = rr.report["result"];
  result["p"] = row.p;
  result["m"] = row.m;
  result["cap_x"] = row.cap_x;
  result["max_class_run"] = row.max_class;
  result["dimension"] = row.dimension;
  result["class_L"] = row.class_L;
  result["class_id_x"] = row.class_id_x;
  result["max_a_entries"] = row.max_a;
  result["max_x_entries"] = row.max_x;
  result["x_boundary_certified"] = row.x_boundary_ok;
  result["a_boundary_certified"] = row.a_boundary_ok;
  result["wall_seconds"] = row.wall_seconds;
  return rr;
}

RunResult do_count_bound(const RunConfig &config) {
  RunResult rr;
  std::string desc = "m=" + std::to_string(config.bound_m) +
                     " cap_x=" + std::to_string(config.bound_cap_x);
  rr.report = make_report("count-bound", desc, "count-bound " + desc);
  auto res =
      freelie::wreath_basis_bound(config.bound_m, config.bound_cap_x);
  Json &result = rr.report["result"];
  result["total"] = res.total;
  Json by_weight = Json::object();
  for (const auto &[w, n] : res.by_weight)
    by_weight[std::to_string(w)] = n;
  result["by_weight"] = by_weight;
  Json by_md = Json::object();
  for (const auto &[md, n] : res.by_multidegree)
    by_md[md.str()] = n;
  result["by_multidegree"] = by_md;
  return rr;
}

RunResult do_wreath3(const RunConfig &config) {
  RunResult rr;
  if (config.wreath_action == "verify") {
    std::string desc = "verify max-index=" + std::to_string(config.max_index) +
                       " weight-cap=" + std::to_string(config.weight_cap);
    rr.report = make_report("wreath3", desc, "wreath3 " + desc);
    auto rep = wreath3::verify_engel_cases(config.max_index, config.weight_cap,
                                           config.threads);
    Json &result = rr.report["result"];
    result["monomials"] = rep.monomials;
    result["cube_instances"] = rep.case1;
    result["pair_instances"] = rep.case2;
    result["triple_instances"] = rep.case3;
    result["instances_total"] = rep.total();
    result["all_zero"] = rep.ok;
    if (!rep.ok) {
      result["counterexample"] = rep.counterexample;
      rr.status = 2;
    }
  } else if (config.wreath_action == "witness") {
    std::string desc = "witness k=" + std::to_string(config.witness_k);
    rr.report = make_report("wreath3", desc, "wreath3 " + desc);
    unsigned max_index = std::max(config.max_index, config.witness_k + 1);
    auto w = wreath3::id_a1_witness(config.witness_k, max_index);
    Json &result = rr.report["result"];
    result["k"] = config.witness_k;
    result["witness"] = w.str();
    result["nonzero"] = !w.is_zero();
    if (w.is_zero())
      rr.status = 2;
  } else {
    throw domain_error("wreath3 action must be verify or witness");
  }
  return rr;
}

RunResult do_snf(const RunConfig &config) {
  if (config.matrix_file.empty())
    throw domain_error("snf needs --in <matrix file>");
  std::string text = read_file(config.matrix_file);
  auto rows = read_matrix(text);
  std::size_t ncols = config.snf_columns;
  if (ncols == 0) {
    for (const auto &row : rows)
      for (const auto &[col, v] : row)
        ncols = std::max<std::size_t>(ncols, col + 1);
  }
  RunResult rr;
  rr.report = make_report("snf", config.matrix_file, text);
  auto snf = smith_normal_form_int(rows, ncols);
  snf.validate();
  Json &result = rr.report["result"];
  result["rows"] = rows.size();
  result["columns"] = ncols;
  result["rank"] = snf.rank;
  result["divisors"] = decimal_list(snf.elementary_divisors);
  result["prime_support"] = decimal_list(exactalg::prime_support(snf));
  return rr;
}

} // namespace

RunResult run(const RunConfig &config) {
  auto t0 = std::chrono::steady_clock::now();
  if (config.threads)
    set_default_threads(config.threads);
  RunResult rr;
  try {
    if (config.subcommand == "build")
      rr = do_build(config);
    else if (config.subcommand == "engel-primes")
      rr = do_engel_primes(config);
    else if (config.subcommand == "gfp-table")
      rr = do_gfp_table(config);
    else if (config.subcommand == "count-bound")
      rr = do_count_bound(config);
    else if (config.subcommand == "wreath3")
      rr = do_wreath3(config);
    else if (config.subcommand == "snf")
      rr = do_snf(config);
    else
      throw domain_error("unknown subcommand '" + config.subcommand + "'");
  } catch (const parse_error &e) {
    rr.report = make_report(config.subcommand, "error", "");
    rr.report["error"] = e.what();
    rr.status = 1;
    return rr;
  } catch (const domain_error &e) {
    rr.report = make_report(config.subcommand, "error", "");
    rr.report["error"] = e.what();
    rr.status = 1;
    return rr;
  } catch (const error &e) {
    rr.report = make_report(config.subcommand, "error", "");
    rr.report["error"] = e.what();
    rr.status = 2;
    return rr;
  }
  double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  attach_timing(rr.report, wall);
  return rr;
}

int run_main(const RunConfig &config, std::ostream &out) {
  RunResult rr = run(config);
  std::string rendered =
      config.structured ? rr.report.dump(2) + "\n" : render_human(rr.report);
  if (!config.output_path.empty()) {
    std::ofstream f(config.output_path);
    if (!f) {
      out << "error: cannot write " << config.output_path << "\n";
      return 1;
    }
    f << rendered;
  } else {
    out << rendered;
  }
  return rr.status;
}

} // namespace engelnq::cli
