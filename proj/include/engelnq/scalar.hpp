#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "engelnq/errors.hpp"

namespace engelnq::exactalg {

enum class RingMode { Rationals, PrimeField, Integers };

/// Value in one of three exact coefficient rings. Rationals are kept in
/// lowest terms with positive denominator (mpq canonical form), prime-field
/// residues lie in [0, p), integers are arbitrary precision. Arithmetic
/// between different modes throws ring_mode_error.
class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }
  static Scalar rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  static Scalar integer(mpz_class z) { return Scalar(std::move(z)); }
  static Scalar integer(long v) { return Scalar(mpz_class(v)); }
  static Scalar gf(std::uint64_t p, long v);

  RingMode mode() const {
    switch (v_.index()) {
    case 0:
      return RingMode::Rationals;
    case 1:
      return RingMode::PrimeField;
    default:
      return RingMode::Integers;
    }
  }

  bool is_zero() const;
  std::uint64_t characteristic() const; // 0 for rationals/integers

  const mpq_class &rational_value() const;
  const mpz_class &integer_value() const;
  std::uint64_t residue_value() const;

  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; integers are not a field, so integer mode throws
  /// unsupported_ring_error (unless the value is a unit).
  Scalar inverse() const;

  bool operator==(const Scalar &o) const;
  bool operator!=(const Scalar &o) const { return !(*this == o); }

  std::string str() const;

private:
  struct GFpValue {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const GFpValue &o) const = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(mpz_class z) : v_(std::move(z)) {}
  explicit Scalar(GFpValue g) : v_(g) {}

  void require_same_mode(const Scalar &o) const;

  std::variant<mpq_class, GFpValue, mpz_class> v_;
};

/// Ordered list of (column index, nonzero coefficient) pairs; indices
/// strictly increasing.
struct SparseRow {
  std::vector<std::pair<std::size_t, Scalar>> entries;

  bool empty() const { return entries.empty(); }
  bool operator==(const SparseRow &o) const { return entries == o.entries; }

  /// Validates the invariants (ordering, no zeros, uniform mode).
  void validate() const;
};

} // namespace engelnq::exactalg
