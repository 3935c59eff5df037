#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "engelnq/multidegree.hpp"

namespace engelnq::freelie {

/// Basis element of a free Lie algebra: a generator, or the standard
/// bracketing of a Lyndon word (left factor, right factor), with weight and
/// multidegree cached.
class HallWord {
public:
  static HallWord generator(unsigned g, MultiDegree md);
  static HallWord pair(HallWord left, HallWord right);

  bool is_generator() const { return gen_ >= 0; }
  unsigned generator_index() const;
  const HallWord &left() const;
  const HallWord &right() const;

  unsigned weight() const { return weight_; }
  const MultiDegree &multidegree() const { return md_; }

  /// Flattened letter sequence (the underlying Lyndon word).
  std::vector<unsigned> letters() const;

  std::string str(const std::vector<std::string> *names = nullptr) const;

private:
  HallWord() = default;
  std::shared_ptr<const HallWord> l_, r_;
  int gen_ = -1;
  MultiDegree md_;
  unsigned weight_ = 0;
};

/// All Hall words (standard bracketings of Lyndon words) over the given
/// weighted generators whose multidegree passes the truncation, sorted by
/// (weight, letter sequence).
std::vector<HallWord> hall_basis(std::size_t num_generators,
                                 const std::vector<MultiDegree> &generator_mds,
                                 const TruncationSpec &trunc);

/// Dimension of the degree-n component of the free Lie algebra on q
/// generators: (1/n) sum_{d|n} mu(d) q^{n/d}.
unsigned long witt_dimension(unsigned num_generators, unsigned degree);

struct WreathBoundResult {
  unsigned long total = 0;
  std::map<MultiDegree, unsigned long> by_multidegree;
  std::map<unsigned, unsigned long> by_weight;
};

/// Dimension bound for the algebra on x, a_1..a_m with commuting a's and
/// caps d_x <= cap_x, d_i <= 1: m plus the number of Hall words over the 2^m
/// derived-ideal generators [x, a_S] (S a subset, multidegree x plus S),
/// filtered to pairwise-disjoint subsets and at most cap_x letters.
WreathBoundResult wreath_basis_bound(unsigned num_commuting, unsigned cap_x);

} // namespace engelnq::freelie
