#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "engelnq/multidegree.hpp"

namespace engelnq::nqcore {

enum class RingSpec { Rationals, PrimeField };

enum class EngelMode { None, Direct, Multilinear, MultilinearPlusPower };

struct EngelSpec {
  unsigned degree = 5;
  EngelMode mode = EngelMode::None;
};

/// A graded presentation: weight-1 generators (position 0 is the
/// distinguished generator x), commuting pairs, multidegree truncation, and
/// an optional Engel constraint enforced layer by layer during the build.
struct Presentation {
  RingSpec ring = RingSpec::Rationals;
  std::uint64_t p = 0; // prime, for RingSpec::PrimeField

  std::vector<std::string> gen_names;
  std::vector<std::pair<unsigned, unsigned>> commuting_pairs;
  TruncationSpec trunc;
  EngelSpec engel;

  // Additional homogeneous relations: each entry is a generator-index word
  // whose left-normed product is set to zero.
  std::vector<std::vector<unsigned>> left_normed_zero;

  unsigned num_generators() const {
    return static_cast<unsigned>(gen_names.size());
  }

  unsigned generator_index(const std::string &name) const;

  void validate() const;

  /// Fixed-order text rendering; reparses to an equivalent presentation.
  std::string canonical_text() const;

  static Presentation parse(const std::string &text);

  /// x, a_1..a_m over the rationals, commuting a's, caps d_x <= target[0],
  /// d_i <= 1, max class = weight of target. No Engel constraint.
  static Presentation rational_case(const MultiDegree &target);

  /// GF(p) 5-Engel configuration: x, a_1..a_m, commuting a's, d_i <= 1.
  static Presentation gfp_engel_case(std::uint64_t p, unsigned m,
                                     unsigned cap_x, unsigned max_class);
};

const char *engel_mode_name(EngelMode mode);

} // namespace engelnq::nqcore
