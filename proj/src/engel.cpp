#include "engelnq/engel.hpp"

#include <algorithm>
#include <chrono>

#include "engelnq/nq_build.hpp"

namespace engelnq::engelgen {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

RelationMatrix relation_rows(const nqcore::GradedLieAlgebra<RationalRing> &A,
                             const MultiDegree &target, unsigned threads,
                             bool reversed_enumeration) {
  if (A.presentation().engel.mode != nqcore::EngelMode::None)
    throw domain_error(
        "relation rows require an algebra built without Engel constraints");
  if (!A.structure_constants_integral())
    throw integrality_error("structure constants are not all integers");

  RelationMatrix out;
  out.target = target;
  out.column_basis = A.block(target);

  std::unordered_map<std::uint32_t, std::uint32_t> col_of_basis;
  for (std::uint32_t k = 0; k < out.column_basis.size(); ++k)
    col_of_basis[out.column_basis[k]] = k;

  auto instances = enumerate_engel_instances(
      A, target.weight(), &target, nqcore::EngelMode::Multilinear,
      reversed_enumeration);
  out.instances = instances.size();

  std::vector<IntRow> rows(instances.size());
  if (!threads)
    threads = default_threads();
  parallel_jobs(
      instances.size(), threads, [&] { return nqcore::Multiplier<RationalRing>(A); },
      [&](nqcore::Multiplier<RationalRing> &M, std::size_t idx) {
        SparseVec<RationalRing> v = evaluate_engel_instance(M, instances[idx]);
        IntRow row;
        row.reserve(v.t.size());
        for (const auto &[i, c] : v.t) {
          if (c.get_den() != 1)
            throw integrality_error("relation coefficient is not an integer");
          row.emplace_back(col_of_basis.at(i), c.get_num());
        }
        rows[idx] = std::move(row);
      });

  for (auto &row : rows) {
    if (row.empty())
      ++out.zero_rows;
    else
      out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const IntRow &a, const IntRow &b) {
              std::size_t n = std::min(a.size(), b.size());
              for (std::size_t k = 0; k < n; ++k) {
                if (a[k].first != b[k].first)
                  return a[k].first < b[k].first;
                int c = cmp(a[k].second, b[k].second);
                if (c != 0)
                  return c < 0;
              }
              return a.size() < b.size();
            });
  return out;
}

std::vector<ExperimentCase> known_cases() {
  auto md = [](std::initializer_list<std::uint16_t> e) {
    return MultiDegree(std::vector<std::uint16_t>(e));
  };
  auto zs = [](std::initializer_list<long> ps) {
    std::vector<mpz_class> v;
    for (long p : ps)
      v.emplace_back(p);
    return v;
  };
  return {
      {md({6, 1, 1}), zs({2, 3, 5, 7})},
      {md({6, 1, 1, 1}), zs({2, 3, 5, 7, 19})},
      {md({6, 1, 1, 1, 1}), zs({2, 3, 5})},
      {md({5, 1, 1, 1, 1, 1}), zs({2, 3, 5, 7, 31})},
      {md({4, 1, 1, 1, 1, 1, 1}), zs({2, 3, 5})},
      {md({3, 1, 1, 1, 1, 1, 1}), zs({2, 3, 5, 7})},
      {md({2, 1, 1, 1, 1, 1, 1}), zs({2, 3})},
  };
}

std::optional<ExperimentCase> find_case(const MultiDegree &target) {
  for (auto &c : known_cases())
    if (c.target == target)
      return c;
  return std::nullopt;
}

PrimesReport exceptional_primes(const ExperimentCase &c, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  PrimesReport rep;
  rep.target = c.target;
  rep.expected_primes = c.expected_primes;

  auto pres = nqcore::Presentation::rational_case(c.target);
  auto A = nqcore::build_rational(pres, threads);
  rep.dimension = A.dimension();
  rep.algebra_class = A.nilpotency_class();

  RelationMatrix matrix = relation_rows(A, c.target, threads);
  rep.columns = matrix.num_columns();
  rep.instances = matrix.instances;
  rep.rows = matrix.rows.size();

  // cheap certificate first; the exact result must agree
  std::size_t rank61 = rank_mod_p(matrix.rows, (1ull << 61) - 1);

  auto snf = smith_normal_form_int(matrix.rows, matrix.num_columns());
  snf.validate();
  if (snf.rank < rank61)
    throw error("exact rank below a mod-p lower bound");
  rep.rank = snf.rank;
  rep.full_rank = snf.rank == matrix.num_columns();
  rep.divisors = snf.elementary_divisors;
  rep.primes = exactalg::prime_support(snf);

  rep.within_expected = true;
  for (const auto &p : rep.primes) {
    if (std::find(rep.expected_primes.begin(), rep.expected_primes.end(), p) ==
        rep.expected_primes.end())
      rep.within_expected = false;
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

GfpPreset gfp_preset(std::uint64_t p) {
  switch (p) {
  case 5:
    return {8, 8, 14};
  case 7:
    return {7, 8, 12};
  case 19:
    return {6, 7, 10};
  case 31:
    return {6, 7, 11};
  default:
    return {6, 7, 10};
  }
}

GfpTableRow gfp_table_row(std::uint64_t p, unsigned m, unsigned cap_x,
                          unsigned max_class, unsigned threads) {
  if (p <= 3)
    throw domain_error("table rows require characteristic p > 3: for p = 2, 3 "
                       "the ideal generated by x need not be nilpotent");
  if (!is_prime_u64(p))
    throw domain_error("p must be prime");
  auto t0 = std::chrono::steady_clock::now();

  auto pres = nqcore::Presentation::gfp_engel_case(p, m, cap_x, max_class);
  auto A = nqcore::build_gfp(pres, threads);

  GfpTableRow row;
  row.p = p;
  row.m = m;
  row.cap_x = cap_x;
  row.max_class = max_class;
  row.dimension = A.dimension();
  row.class_L = A.nilpotency_class();
  row.class_id_x = A.ideal_class(0u);
  row.max_a = A.max_a_entries();
  row.max_x = A.max_x_entries();
  row.x_boundary_ok = row.max_x < cap_x;
  row.a_boundary_ok = row.max_a < m;
  row.wall_seconds = seconds_since(t0);
  return row;
}

} // namespace engelnq::engelgen
