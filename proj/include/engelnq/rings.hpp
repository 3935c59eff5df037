#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "engelnq/errors.hpp"

namespace engelnq {

/// Coefficient ring policies for the templated linear algebra and the
/// nilpotent quotient core. A policy provides a value type and the field
/// operations; stateful rings (prime fields) carry their modulus.

struct RationalRing {
  using Elem = mpq_class;
  static constexpr bool kIsPrimeField = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  bool is_zero(const Elem &a) const { return sgn(a) == 0; }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem inv(const Elem &a) const {
    if (is_zero(a))
      throw domain_error("division by zero");
    return Elem(1) / a;
  }
  bool is_integral(const Elem &a) const { return a.get_den() == 1; }
  std::string str(const Elem &a) const { return a.get_str(); }
};

struct PrimeFieldRing {
  using Elem = std::uint64_t;
  static constexpr bool kIsPrimeField = true;

  std::uint64_t p = 0;

  PrimeFieldRing() = default;
  explicit PrimeFieldRing(std::uint64_t p_) : p(p_) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0)
      r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(const Elem &a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
      if (e & 1)
        r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0)
      throw domain_error("division by zero");
    return pow(a, p - 2);
  }
  bool is_integral(const Elem &) const { return true; }
  std::string str(const Elem &a) const { return std::to_string(a); }
};

/// Primality by trial division + deterministic Miller-Rabin (64-bit range).
bool is_prime_u64(std::uint64_t n);

} // namespace engelnq
