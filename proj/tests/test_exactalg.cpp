#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "engelnq/echelon.hpp"
#include "engelnq/scalar.hpp"
#include "engelnq/snf.hpp"

using namespace engelnq;
using exactalg::RingMode;
using exactalg::Scalar;
using exactalg::SparseRow;

namespace {

SparseRow qrow(std::initializer_list<std::pair<std::size_t, long>> entries) {
  SparseRow r;
  for (auto [c, v] : entries)
    if (v != 0)
      r.entries.emplace_back(c, Scalar::rational(v, 1));
  return r;
}

SparseRow gfrow(std::uint64_t p,
                std::initializer_list<std::pair<std::size_t, long>> entries) {
  SparseRow r;
  for (auto [c, v] : entries) {
    Scalar s = Scalar::gf(p, v);
    if (!s.is_zero())
      r.entries.emplace_back(c, s);
  }
  return r;
}

SparseRow zrow(std::initializer_list<std::pair<std::size_t, long>> entries) {
  SparseRow r;
  for (auto [c, v] : entries)
    if (v != 0)
      r.entries.emplace_back(c, Scalar::integer(v));
  return r;
}

// brute-force row space of rows over GF(p): all linear combinations
std::set<std::vector<std::uint64_t>>
gf_row_space(const std::vector<SparseRow> &rows, std::uint64_t p,
             std::size_t ncols) {
  std::vector<std::vector<std::uint64_t>> dense;
  for (const auto &r : rows) {
    std::vector<std::uint64_t> d(ncols, 0);
    for (const auto &[c, s] : r.entries)
      d[c] = s.residue_value();
    dense.push_back(d);
  }
  std::set<std::vector<std::uint64_t>> space;
  std::vector<std::uint64_t> coeffs(dense.size(), 0);
  while (true) {
    std::vector<std::uint64_t> v(ncols, 0);
    for (std::size_t i = 0; i < dense.size(); ++i)
      for (std::size_t c = 0; c < ncols; ++c)
        v[c] = (v[c] + coeffs[i] * dense[i][c]) % p;
    space.insert(v);
    std::size_t k = 0;
    while (k < coeffs.size() && ++coeffs[k] == p) {
      coeffs[k] = 0;
      ++k;
    }
    if (k == coeffs.size())
      break;
  }
  return space;
}

mpz_class det_recursive(const std::vector<std::vector<mpz_class>> &m,
                        std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
  if (rows.empty())
    return 1;
  mpz_class acc = 0;
  int sign = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto r2 = rows;
    r2.erase(r2.begin());
    auto c2 = cols;
    c2.erase(c2.begin() + static_cast<long>(k));
    acc += sign * m[rows[0]][cols[k]] * det_recursive(m, r2, c2);
    sign = -sign;
  }
  return acc;
}

// gcd of all k x k minors (0 if all vanish)
mpz_class minor_gcd(const std::vector<std::vector<mpz_class>> &m, unsigned k) {
  std::size_t nr = m.size(), nc = m[0].size();
  mpz_class g = 0;
  std::vector<std::size_t> rsel(k), csel(k);
  auto combos = [](std::size_t n, unsigned k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    auto rec = [&](auto &&self, std::size_t from, unsigned depth) -> void {
      if (depth == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < n; ++i) {
        cur[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    return out;
  };
  for (const auto &rs : combos(nr, k))
    for (const auto &cs : combos(nc, k)) {
      mpz_class d = det_recursive(m, rs, cs);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

} // namespace

TEST_CASE("scalar ring modes") {
  Scalar q = Scalar::rational(2, 4);
  CHECK(q.rational_value() == mpq_class(1, 2));
  CHECK(q.str() == "1/2");

  Scalar a = Scalar::gf(5, 7);
  CHECK(a.residue_value() == 2);
  CHECK((a + Scalar::gf(5, 3)).is_zero());
  CHECK((a * Scalar::gf(5, 3)).residue_value() == 1);
  CHECK(a.inverse().residue_value() == 3);

  Scalar z = Scalar::integer(-6);
  CHECK(z.integer_value() == -6);

  CHECK_THROWS_AS(q + a, ring_mode_error);
  CHECK_THROWS_AS(z * q, ring_mode_error);
  CHECK_THROWS_AS(a + Scalar::gf(7, 1), ring_mode_error);
  CHECK_THROWS_AS(Scalar::integer(2).inverse(), unsupported_ring_error);
  CHECK_THROWS_AS(Scalar::gf(6, 1), domain_error);
}

TEST_CASE("echelonize: trivial examples") {
  auto [rows0, piv0] = exactalg::echelonize({});
  CHECK(rows0.empty());
  CHECK(piv0.empty());

  // scalar multiples collapse
  auto [rows1, piv1] = exactalg::echelonize({qrow({{0, 1}}), qrow({{0, 2}})});
  REQUIRE(rows1.size() == 1);
  CHECK(rows1[0] == qrow({{0, 1}}));
  CHECK(piv1 == std::vector<std::size_t>{0});
}

TEST_CASE("echelonize over GF(5): verified against row-space enumeration") {
  std::vector<SparseRow> rows{gfrow(5, {{0, 1}, {1, 1}}),
                              gfrow(5, {{0, 1}, {1, -1}})};
  auto [basis, pivots] = exactalg::echelonize(rows);

  // the frozen expected value, checked below against the brute-force oracle
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == gfrow(5, {{0, 1}}));
  CHECK(basis[1] == gfrow(5, {{1, 1}}));
  CHECK(pivots == std::vector<std::size_t>{0, 1});

  auto space = gf_row_space(rows, 5, 2);
  auto space2 = gf_row_space(basis, 5, 2);
  CHECK(space == space2);
}

TEST_CASE("echelonize: mode errors") {
  CHECK_THROWS_AS(exactalg::echelonize({qrow({{0, 1}}), gfrow(5, {{0, 1}})}),
                  ring_mode_error);
  CHECK_THROWS_AS(exactalg::echelonize({zrow({{0, 2}})}),
                  unsupported_ring_error);
}

TEST_CASE("echelonize is idempotent") {
  std::mt19937 rng(20240521);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SparseRow> rows;
    for (int r = 0; r < 5; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < 6; ++c) {
        long v = static_cast<long>(rng() % 7) - 3;
        if (v != 0)
          row.entries.emplace_back(c, Scalar::rational(v, 1));
      }
      rows.push_back(row);
    }
    auto [basis, pivots] = exactalg::echelonize(rows);
    auto [basis2, pivots2] = exactalg::echelonize(basis);
    CHECK(basis == basis2);
    CHECK(pivots == pivots2);
  }
}

TEST_CASE("smith normal form: identity and frozen 2x2") {
  auto id3 = exactalg::smith_normal_form(
      {zrow({{0, 1}}), zrow({{1, 1}}), zrow({{2, 1}})}, 3);
  id3.validate();
  CHECK(id3.rank == 3);
  CHECK(id3.elementary_divisors ==
        std::vector<mpz_class>{1, 1, 1});

  // divisors derived from the determinantal characterization:
  // d1 = gcd of the entries = 2, d1*d2 = |det| = 8
  auto r = exactalg::smith_normal_form(
      {zrow({{0, 2}, {1, 4}}), zrow({{0, 6}, {1, 8}})}, 2);
  r.validate();
  CHECK(r.rank == 2);
  CHECK(r.elementary_divisors == std::vector<mpz_class>{2, 4});

  std::vector<std::vector<mpz_class>> dense{{2, 4}, {6, 8}};
  CHECK(minor_gcd(dense, 1) == 2);
  CHECK(minor_gcd(dense, 2) == 8);

  CHECK_THROWS_AS(exactalg::smith_normal_form({qrow({{0, 1}})}, 1),
                  ring_mode_error);
}

TEST_CASE("smith normal form: determinantal divisor property on random "
          "matrices") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t nr = 1 + rng() % 5, nc = 1 + rng() % 5;
    std::vector<std::vector<mpz_class>> dense(
        nr, std::vector<mpz_class>(nc, 0));
    std::vector<IntRow> rows(nr);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        long v = static_cast<long>(rng() % 9) - 4;
        dense[i][j] = v;
        if (v != 0)
          rows[i].emplace_back(static_cast<std::uint32_t>(j), mpz_class(v));
      }
    auto snf = smith_normal_form_int(rows, nc);
    snf.validate();

    mpz_class prod = 1;
    for (unsigned k = 1; k <= std::min(nr, nc); ++k) {
      mpz_class g = minor_gcd(dense, k);
      if (k <= snf.rank) {
        prod *= snf.elementary_divisors[k - 1];
        CHECK(g == prod);
      } else {
        CHECK(g == 0);
      }
    }

    // rank agrees with rational echelonization
    std::vector<SparseRow> qrows;
    for (const auto &row : rows) {
      SparseRow qr;
      for (const auto &[c, v] : row)
        qr.entries.emplace_back(c, Scalar::rational(mpq_class(v)));
      qrows.push_back(qr);
    }
    auto [basis, pivots] = exactalg::echelonize(qrows);
    CHECK(basis.size() == snf.rank);
  }
}

TEST_CASE("smith normal form: full rank is stable under redundant rows") {
  std::vector<IntRow> rows{{{0, mpz_class(2)}, {1, mpz_class(1)}},
                           {{0, mpz_class(1)}, {1, mpz_class(3)}}};
  auto base = smith_normal_form_int(rows, 2);
  CHECK(base.rank == 2);
  auto more = rows;
  more.push_back(rows[0]);
  // an integer combination already in the row lattice
  more.push_back({{0, mpz_class(2 + 3 * 1)}, {1, mpz_class(1 + 3 * 3)}});
  auto again = smith_normal_form_int(more, 2);
  CHECK(again.rank == base.rank);
  CHECK(again.elementary_divisors == base.elementary_divisors);
}

TEST_CASE("prime support") {
  exactalg::SNFResult s;
  s.rank = 3;
  s.elementary_divisors = {1, 1, 1};
  CHECK(exactalg::prime_support(s).empty());

  s.rank = 2;
  s.elementary_divisors = {1, 6};
  CHECK(exactalg::prime_support(s) == std::vector<mpz_class>{2, 3});

  s.rank = 2;
  s.elementary_divisors = {2, mpz_class("4611686018427387902")}; // 2 * (2^61-1)
  auto ps = exactalg::prime_support(s);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == 2);
  CHECK(ps[1] == mpz_class("2305843009213693951"));
}

TEST_CASE("rank_mod_p lower bound") {
  std::vector<IntRow> rows{{{0, mpz_class(5)}}, {{1, mpz_class(7)}}};
  CHECK(rank_mod_p(rows, 5) == 1);
  CHECK(rank_mod_p(rows, 3) == 2);
}
