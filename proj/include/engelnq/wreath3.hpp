#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "engelnq/errors.hpp"

namespace engelnq::wreath3 {

/// Factor acting on the ideal generated by b: a generator a_i, or one of the
/// central brackets [a_r, a_1] (r >= 2).
struct Factor {
  enum class Kind : std::uint8_t { Plain, Bracket };
  Kind kind = Kind::Plain;
  unsigned index = 1;

  static Factor plain(unsigned i) { return {Kind::Plain, i}; }
  static Factor bracket(unsigned r) { return {Kind::Bracket, r}; }

  auto operator<=>(const Factor &) const = default;

  std::string str() const {
    if (kind == Kind::Plain)
      return "a" + std::to_string(index);
    return "[a" + std::to_string(index) + ",a1]";
  }
};

/// Canonical spanning monomial [b, a_i, ..., a_k, [a_r,a_1], ..., [a_t,a_1]]
/// with both index lists ascending. In the quotient, a nonzero monomial has
/// at most two plain 1's and each index n > 1 at most once across both lists.
struct Monomial {
  std::vector<unsigned> plain;   // ascending (repeats only for index 1)
  std::vector<unsigned> bracket; // ascending, distinct, indices >= 2

  unsigned weight() const {
    return 1 + static_cast<unsigned>(plain.size()) +
           2 * static_cast<unsigned>(bracket.size());
  }

  std::vector<Factor> factors() const {
    std::vector<Factor> fs;
    fs.reserve(plain.size() + bracket.size());
    for (unsigned i : plain)
      fs.push_back(Factor::plain(i));
    for (unsigned r : bracket)
      fs.push_back(Factor::bracket(r));
    return fs;
  }

  auto operator<=>(const Monomial &) const = default;

  std::string str() const {
    std::string s = "[b";
    for (unsigned i : plain)
      s += ",a" + std::to_string(i);
    for (unsigned r : bracket)
      s += ",[a" + std::to_string(r) + ",a1]";
    return s + "]";
  }
};

/// GF(3) element of the quotient algebra: a combination of canonical
/// monomials (the part inside the ideal generated by b) plus a combination
/// of a_i and [a_r,a_1] basis elements of the acting algebra.
struct Element {
  std::map<Monomial, unsigned char> c; // coefficients in {1, 2}
  std::map<Factor, unsigned char> a;

  bool is_zero() const { return c.empty() && a.empty(); }
  bool operator==(const Element &) const = default;

  std::string str() const;
};

Element b_element();
Element monomial_element(Monomial m);
Element a_element(Factor f);

Element add(const Element &u, const Element &v);
Element negate(const Element &u);

/// Canonical image of the left-normed product [b, f_1, ..., f_k].
Element normal_form(const std::vector<Factor> &raw);

/// Lie bracket in the quotient.
Element bracket(const Element &u, const Element &v);

struct VerifyReport {
  unsigned long monomials = 0;
  unsigned long case1 = 0;
  unsigned long case2 = 0;
  unsigned long case3 = 0;
  bool ok = true;
  std::string counterexample;

  unsigned long total() const { return case1 + case2 + case3; }
};

/// Checks, over every canonical monomial c with indices <= max_index and
/// weight <= weight_cap and all choices of basis factors x, y, z:
///   (1) [c,x,x,x] = 0
///   (2) [c,x,x,y] + [c,x,y,x] + [c,y,x,x] = 0       (x != y)
///   (3) the six-permutation sum of [c,x,y,z] = 0    (x, y, z distinct)
/// Together with the cubes of triple products landing in the abelian ideal,
/// a pass certifies the 5-Engel identity at this truncation.
VerifyReport verify_engel_cases(unsigned max_index, unsigned weight_cap,
                                unsigned threads = 0);

/// The nonzero monomial [b, [a_2,a_1], ..., [a_{k+1},a_1]]: a product of b
/// with k factors from the ideal generated by a_1, so the k-th term of that
/// ideal's lower central series is nonzero.
Element id_a1_witness(unsigned k, unsigned max_index);

/// All canonical monomials with indices <= max_index, weight <= weight_cap.
std::vector<Monomial> monomial_basis(unsigned max_index, unsigned weight_cap);

} // namespace engelnq::wreath3
