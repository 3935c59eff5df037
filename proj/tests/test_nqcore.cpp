#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "engelnq/hall.hpp"
#include "engelnq/nq_build.hpp"

using namespace engelnq;
using namespace engelnq::nqcore;

namespace {

Presentation free_on(unsigned q, unsigned max_class) {
  Presentation pres;
  pres.gen_names.push_back("x");
  for (unsigned i = 1; i < q; ++i)
    pres.gen_names.push_back("a" + std::to_string(i));
  pres.trunc.max_class = max_class;
  return pres;
}

template <class Ring>
bool jacobi_holds(const GradedLieAlgebra<Ring> &A, std::uint32_t i,
                  std::uint32_t j, std::uint32_t k) {
  Multiplier<Ring> M(A);
  Accumulator<Ring> acc(A.ring());
  acc.add(M.mul_vec_basis(M.bracket(i, j), k));
  acc.add(M.mul_vec_basis(M.bracket(j, k), i));
  acc.add(M.mul_vec_basis(M.bracket(k, i), j));
  return acc.extract().empty();
}

template <class Ring>
bool grading_holds(const GradedLieAlgebra<Ring> &A, std::uint32_t i,
                   std::uint32_t j) {
  Multiplier<Ring> M(A);
  auto v = M.bracket(i, j);
  MultiDegree want = A.basis()[i].md + A.basis()[j].md;
  for (const auto &[k, c] : v.t)
    if (A.basis()[k].md != want)
      return false;
  return true;
}

} // namespace

TEST_CASE("free Lie algebra dimensions match the Witt formula") {
  for (unsigned q = 2; q <= 3; ++q) {
    auto A = build_rational(free_on(q, 5));
    for (unsigned n = 1; n <= 5; ++n)
      CHECK(A.weight_layer(n).size() == freelie::witt_dimension(q, n));
  }
}

TEST_CASE("single generator: one-dimensional algebra") {
  auto A = build_rational(free_on(1, 4));
  CHECK(A.dimension() == 1);
  CHECK(A.nilpotency_class() == 1);
}

TEST_CASE("multiply: alternating, antisymmetric, bilinear") {
  auto A = build_rational(free_on(2, 4));
  std::mt19937 rng(77);
  for (int t = 0; t < 20; ++t) {
    SparseVec<RationalRing> v;
    for (std::uint32_t i = 0; i < A.dimension(); ++i)
      if (rng() % 3 == 0)
        v.t.emplace_back(i, mpq_class(static_cast<long>(rng() % 7) - 3));
    std::erase_if(v.t, [](const auto &e) { return e.second == 0; });
    auto u = A.element(v);
    CHECK(A.multiply(u, u).is_zero());
  }
  for (int t = 0; t < 30; ++t) {
    std::uint32_t i = rng() % A.dimension(), j = rng() % A.dimension();
    auto bi = A.basis_element(i), bj = A.basis_element(j);
    auto uv = A.multiply(bi, bj);
    auto vu = A.multiply(bj, bi);
    for (auto &[k, c] : vu.vec.t)
      c = -c;
    CHECK(uv.vec == vu.vec);
  }

  // [a+b, a-b] = -2[a,b] in the class-2 free algebra on a, b
  auto B = build_rational(free_on(2, 2));
  REQUIRE(B.dimension() == 3);
  auto a = B.generator(0), b = B.generator(1);
  SparseVec<RationalRing> plus, minus;
  plus.t = {{0, mpq_class(1)}, {1, mpq_class(1)}};
  minus.t = {{0, mpq_class(1)}, {1, mpq_class(-1)}};
  auto lhs = B.multiply(B.element(plus), B.element(minus));
  auto ab = B.multiply(a, b);
  REQUIRE(ab.vec.t.size() == 1);
  auto expect = ab.vec;
  expect.t[0].second *= -2;
  CHECK(lhs.vec == expect);
}

TEST_CASE("multiply: ownership errors") {
  auto A = build_rational(free_on(2, 3));
  auto B = build_rational(free_on(2, 3));
  auto u = A.generator(0);
  auto v = B.generator(1);
  CHECK_THROWS_AS(A.multiply(u, v), ownership_error);
  CHECK_THROWS_AS(B.multiply(u, v), ownership_error);
}

TEST_CASE("left_normed") {
  auto A = build_rational(free_on(2, 2));
  auto a = A.generator(0);
  std::vector<LieElement<RationalRing>> single{a};
  CHECK(A.left_normed(single).vec == a.vec);

  // central right factor kills the product: weight-2 element in class 2
  auto c = A.basis_element(2);
  std::vector<LieElement<RationalRing>> triple{a, c};
  CHECK(A.left_normed(triple).is_zero());

  std::vector<LieElement<RationalRing>> empty;
  CHECK_THROWS_AS(A.left_normed(empty), domain_error);
}

TEST_CASE("commuting relations and caps: the 36-dimensional case") {
  MultiDegree target(std::vector<std::uint16_t>{6, 1, 1});
  auto A = build_rational(Presentation::rational_case(target));
  CHECK(A.dimension() == 36);
  CHECK(A.nilpotency_class() == 8);
  // independent count of the same truncated construction
  CHECK(freelie::wreath_basis_bound(2, 6).total == A.dimension());

  // commuting pairs really vanish
  auto z = A.multiply(A.generator(1), A.generator(2));
  CHECK(z.is_zero());

  // weight-2 layer: [a1,x] and [a2,x] only
  CHECK(A.weight_layer(2).size() == 2);
}

TEST_CASE("Jacobi identity holds exhaustively on a 36-dim algebra") {
  MultiDegree target(std::vector<std::uint16_t>{6, 1, 1});
  auto A = build_rational(Presentation::rational_case(target));
  const std::uint32_t n = static_cast<std::uint32_t>(A.dimension());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k)
        REQUIRE(jacobi_holds(A, i, j, k));
}

TEST_CASE("grading of structure constants") {
  MultiDegree target(std::vector<std::uint16_t>{6, 1, 1, 1});
  auto A = build_rational(Presentation::rational_case(target));
  std::mt19937 rng(31337);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t i = rng() % A.dimension(), j = rng() % A.dimension();
    REQUIRE(grading_holds(A, i, j));
  }
}

TEST_CASE("dimension agrees with the independent count on the named cases") {
  struct Case {
    unsigned m, cap_x;
  };
  for (auto [m, cap_x] : {Case{2, 6}, Case{3, 6}, Case{4, 2}, Case{6, 2}}) {
    std::vector<std::uint16_t> exps{static_cast<std::uint16_t>(cap_x)};
    for (unsigned i = 0; i < m; ++i)
      exps.push_back(1);
    auto A = build_rational(Presentation::rational_case(MultiDegree(exps)));
    auto bound = freelie::wreath_basis_bound(m, cap_x);
    CHECK(A.dimension() == bound.total);
    // per-weight agreement
    for (unsigned w = 1; w <= A.nilpotency_class(); ++w) {
      auto it = bound.by_weight.find(w);
      unsigned long expect = it == bound.by_weight.end() ? 0 : it->second;
      CHECK(A.weight_layer(w).size() == expect);
    }
  }
}

TEST_CASE("relabeling the commuting generators preserves the profile") {
  Presentation p1;
  p1.gen_names = {"x", "a1", "a2", "a3"};
  p1.commuting_pairs = {{1, 2}};
  p1.trunc.cap_x = 3;
  p1.trunc.cap_a = 1;
  p1.trunc.max_class = 5;

  Presentation p2 = p1;
  p2.commuting_pairs = {{2, 3}};

  auto A1 = build_rational(p1);
  auto A2 = build_rational(p2);
  CHECK(A1.dimension() == A2.dimension());
  CHECK(A1.nilpotency_class() == A2.nilpotency_class());
  for (unsigned w = 1; w <= A1.nilpotency_class(); ++w)
    CHECK(A1.weight_layer(w).size() == A2.weight_layer(w).size());
}

TEST_CASE("ideal_class: abelian and small cases") {
  Presentation ab;
  ab.gen_names = {"x", "a1"};
  ab.commuting_pairs = {{0, 1}};
  ab.trunc.max_class = 3;
  auto A = build_rational(ab);
  CHECK(A.dimension() == 2);
  CHECK(A.ideal_class(0u) == 1);
  CHECK(A.ideal_class("a1") == 1);
  CHECK_THROWS_AS(A.ideal_class(5u), domain_error);
  CHECK_THROWS_AS(A.ideal_class("nope"), domain_error);

  // free class-2 on two generators: Id(x) = <x, [x,a], [a,x]> has class 2:
  // [[a1,x],x] = 0 but [a1,x] and x give a nonzero product
  auto F = build_rational(free_on(2, 3));
  CHECK(F.ideal_class(0u) == 2);
}

TEST_CASE("GF(p) build matches the rational one on free configurations") {
  Presentation pq = free_on(2, 5);
  auto A = build_rational(pq);
  Presentation pp = pq;
  pp.ring = RingSpec::PrimeField;
  pp.p = 7;
  auto B = build_gfp(pp);
  CHECK(A.dimension() == B.dimension());
  CHECK(A.nilpotency_class() == B.nilpotency_class());
}

TEST_CASE("extra left-normed relations are enforced with ideal closure") {
  // free 2-generator algebra with [x, a1, a1] = 0
  Presentation pres = free_on(2, 4);
  pres.left_normed_zero = {{0, 1, 1}};
  auto A = build_rational(pres);
  auto x = A.generator(0), a = A.generator(1);
  std::vector<LieElement<RationalRing>> word{x, a, a};
  CHECK(A.left_normed(word).is_zero());
  // a consequence at weight 4: [x, a1, a1, x] = 0 without being imposed
  std::vector<LieElement<RationalRing>> longer{x, a, a, x};
  CHECK(A.left_normed(longer).is_zero());
  auto F = build_rational(free_on(2, 4));
  CHECK(A.dimension() < F.dimension());
}

TEST_CASE("deterministic structure table export") {
  MultiDegree target(std::vector<std::uint16_t>{3, 1, 1});
  auto A1 = build_rational(Presentation::rational_case(target), 1);
  auto A2 = build_rational(Presentation::rational_case(target), 4);
  std::ostringstream s1, s2;
  A1.export_table(s1);
  A2.export_table(s2);
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().find("engelnq table v1") == 0);
  CHECK(A1.structure_constants_integral());
}

TEST_CASE("presentation parsing") {
  const char *text = "# demo\n"
                     "ring GF 5\n"
                     "gens x a1 a2\n"
                     "commute-all-a\n"
                     "cap x 8\n"
                     "cap a 1\n"
                     "maxclass 13\n"
                     "engel 5 multilinear+power\n";
  auto pres = Presentation::parse(text);
  CHECK(pres.ring == RingSpec::PrimeField);
  CHECK(pres.p == 5);
  CHECK(pres.gen_names.size() == 3);
  CHECK(pres.commuting_pairs.size() == 1);
  CHECK(pres.trunc.cap_x == 8);
  CHECK(pres.engel.mode == EngelMode::MultilinearPlusPower);

  auto round = Presentation::parse(pres.canonical_text());
  CHECK(round.canonical_text() == pres.canonical_text());

  CHECK_THROWS_AS(Presentation::parse("gens x\nbadline 1\nmaxclass 2\n"),
                  parse_error);
  try {
    Presentation::parse("gens x\ncommute x y\nmaxclass 2\n");
    FAIL("expected parse error");
  } catch (const parse_error &e) {
    CHECK(e.line == 2);
  }
}
