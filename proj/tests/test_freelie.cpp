#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "engelnq/hall.hpp"

using namespace engelnq;
using freelie::HallWord;

namespace {

bool is_lyndon(const std::vector<unsigned> &w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    bool decided = false;
    for (std::size_t k = 0; k < n; ++k) {
      unsigned a = w[k];
      unsigned b = w[(k + r) % n];
      if (a != b) {
        if (a > b)
          return false;
        decided = true;
        break;
      }
    }
    if (!decided)
      return false; // periodic
  }
  return true;
}

// brute-force count of Lyndon words over q letters, exact length n
unsigned long lyndon_count_brute(unsigned q, unsigned n) {
  std::vector<unsigned> w(n, 0);
  unsigned long count = 0;
  while (true) {
    if (is_lyndon(w))
      ++count;
    std::size_t k = 0;
    while (k < n && ++w[k] == q) {
      w[k] = 0;
      ++k;
    }
    if (k == n)
      break;
  }
  return count;
}

// brute-force count of Lyndon words over the 2^m subset letters with
// pairwise-disjoint index sets, exact length n
unsigned long disjoint_lyndon_count_brute(unsigned m, unsigned n) {
  const unsigned q = 1u << m;
  std::vector<unsigned> w(n, 0);
  unsigned long count = 0;
  while (true) {
    unsigned seen = 0;
    bool ok = true;
    for (unsigned letter : w) {
      if (seen & letter) {
        ok = false;
        break;
      }
      seen |= letter;
    }
    if (ok && is_lyndon(w))
      ++count;
    std::size_t k = 0;
    while (k < n && ++w[k] == q) {
      w[k] = 0;
      ++k;
    }
    if (k == n)
      break;
  }
  return count;
}

std::vector<MultiDegree> unit_mds(unsigned q) {
  std::vector<MultiDegree> mds;
  for (unsigned g = 0; g < q; ++g)
    mds.push_back(MultiDegree::unit(q, g));
  return mds;
}

} // namespace

TEST_CASE("witt dimension: small values and brute-force cross-check") {
  CHECK(freelie::witt_dimension(2, 1) == 2);
  CHECK(freelie::witt_dimension(2, 2) == 1);
  CHECK(freelie::witt_dimension(3, 3) == 8);
  CHECK_THROWS_AS(freelie::witt_dimension(2, 0), domain_error);
  CHECK_THROWS_AS(freelie::witt_dimension(0, 2), domain_error);

  for (unsigned q = 1; q <= 3; ++q)
    for (unsigned n = 1; n <= 6; ++n)
      CHECK(freelie::witt_dimension(q, n) == lyndon_count_brute(q, n));
}

TEST_CASE("hall basis matches Witt dimensions without truncation") {
  for (unsigned q = 2; q <= 3; ++q) {
    TruncationSpec trunc;
    trunc.max_class = 6;
    auto basis = freelie::hall_basis(q, unit_mds(q), trunc);
    std::map<unsigned, unsigned long> by_weight;
    for (const auto &w : basis)
      by_weight[w.weight()] += 1;
    for (unsigned n = 1; n <= 6; ++n)
      CHECK(by_weight[n] == freelie::witt_dimension(q, n));
  }
}

TEST_CASE("hall basis: small explicit examples") {
  TruncationSpec trunc2;
  trunc2.max_class = 2;
  auto basis2 = freelie::hall_basis(2, unit_mds(2), trunc2);
  REQUIRE(basis2.size() == 3); // a, b, and one weight-2 bracket
  CHECK(basis2[0].is_generator());
  CHECK(basis2[1].is_generator());
  CHECK(!basis2[2].is_generator());
  CHECK(basis2[2].weight() == 2);

  TruncationSpec trunc3;
  trunc3.max_class = 3;
  CHECK(freelie::hall_basis(2, unit_mds(2), trunc3).size() == 5);

  TruncationSpec trunc1;
  trunc1.max_class = 1;
  CHECK(freelie::hall_basis(3, unit_mds(3), trunc1).size() == 3);

  CHECK(freelie::hall_basis(0, {}, trunc1).empty());
}

TEST_CASE("hall words: multidegree additivity and letter flattening") {
  TruncationSpec trunc;
  trunc.max_class = 5;
  auto basis = freelie::hall_basis(3, unit_mds(3), trunc);
  for (const auto &w : basis) {
    if (w.is_generator())
      continue;
    MultiDegree sum = w.left().multidegree() + w.right().multidegree();
    CHECK(sum == w.multidegree());
    auto l = w.left().letters();
    auto r = w.right().letters();
    l.insert(l.end(), r.begin(), r.end());
    CHECK(l == w.letters());
    CHECK(is_lyndon(w.letters()));
  }
}

TEST_CASE("truncation monotonicity") {
  std::vector<MultiDegree> mds = unit_mds(3);
  TruncationSpec loose;
  loose.max_class = 5;
  TruncationSpec tight = loose;
  tight.cap_a = 1;
  auto nl = freelie::hall_basis(3, mds, loose).size();
  auto nt = freelie::hall_basis(3, mds, tight).size();
  CHECK(nt <= nl);

  TruncationSpec lower = loose;
  lower.max_class = 4;
  CHECK(freelie::hall_basis(3, mds, lower).size() <= nl);
}

TEST_CASE("wreath bound: the 5705 configuration, against brute force") {
  auto res = freelie::wreath_basis_bound(6, 4);
  CHECK(res.total == 5705);

  // layer counts by word length = degree in x, against plain enumeration
  std::map<unsigned, unsigned long> by_length;
  for (const auto &[md, n] : res.by_multidegree)
    if (md[0] >= 1)
      by_length[md[0]] += n;
  CHECK(by_length[1] == 64);
  CHECK(by_length[2] == 364);
  CHECK(by_length[3] == 1365);
  CHECK(by_length[4] == 3906);
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(by_length[n] == disjoint_lyndon_count_brute(6, n));

  // the top layer is a single multidegree of size 1024
  MultiDegree top(std::vector<std::uint16_t>{4, 1, 1, 1, 1, 1, 1});
  CHECK(res.by_multidegree.at(top) == 1024);
  CHECK(res.by_weight.at(10) == 1024);
}

TEST_CASE("wreath bound: degenerate and small cases") {
  CHECK(freelie::wreath_basis_bound(0, 4).total == 1);
  // m = 1, cap 2: basis x, a1, [x,a1], [x,[x,a1]]
  CHECK(freelie::wreath_basis_bound(1, 2).total == 4);
  CHECK(freelie::wreath_basis_bound(2, 6).total == 36);
}
