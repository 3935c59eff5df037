#include "engelnq/scalar.hpp"

#include "engelnq/rings.hpp"

namespace engelnq::exactalg {

Scalar Scalar::gf(std::uint64_t p, long v) {
  if (p < 2 || !is_prime_u64(p))
    throw domain_error("prime-field modulus must be prime");
  long r = v % static_cast<long>(p);
  if (r < 0)
    r += static_cast<long>(p);
  return Scalar(GFpValue{static_cast<std::uint64_t>(r), p});
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto &v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GFpValue>)
          return v.v == 0;
        else
          return sgn(v) == 0;
      },
      v_);
}

std::uint64_t Scalar::characteristic() const {
  if (const auto *g = std::get_if<GFpValue>(&v_))
    return g->p;
  return 0;
}

const mpq_class &Scalar::rational_value() const {
  if (const auto *q = std::get_if<mpq_class>(&v_))
    return *q;
  throw ring_mode_error("scalar is not in rational mode");
}

const mpz_class &Scalar::integer_value() const {
  if (const auto *z = std::get_if<mpz_class>(&v_))
    return *z;
  throw ring_mode_error("scalar is not in integer mode");
}

std::uint64_t Scalar::residue_value() const {
  if (const auto *g = std::get_if<GFpValue>(&v_))
    return g->v;
  throw ring_mode_error("scalar is not in prime-field mode");
}

void Scalar::require_same_mode(const Scalar &o) const {
  if (mode() != o.mode())
    throw ring_mode_error("mixed ring modes in scalar arithmetic");
  if (mode() == RingMode::PrimeField &&
      std::get<GFpValue>(v_).p != std::get<GFpValue>(o.v_).p)
    throw ring_mode_error("mixed prime-field moduli");
}

Scalar Scalar::operator+(const Scalar &o) const {
  require_same_mode(o);
  switch (mode()) {
  case RingMode::Rationals:
    return rational(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  case RingMode::Integers:
    return integer(mpz_class(std::get<mpz_class>(v_) +
                             std::get<mpz_class>(o.v_)));
  default: {
    const auto &a = std::get<GFpValue>(v_);
    const auto &b = std::get<GFpValue>(o.v_);
    PrimeFieldRing R(a.p);
    return Scalar(GFpValue{R.add(a.v, b.v), a.p});
  }
  }
}

Scalar Scalar::operator-(const Scalar &o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar &o) const {
  require_same_mode(o);
  switch (mode()) {
  case RingMode::Rationals:
    return rational(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  case RingMode::Integers:
    return integer(mpz_class(std::get<mpz_class>(v_) *
                             std::get<mpz_class>(o.v_)));
  default: {
    const auto &a = std::get<GFpValue>(v_);
    const auto &b = std::get<GFpValue>(o.v_);
    PrimeFieldRing R(a.p);
    return Scalar(GFpValue{R.mul(a.v, b.v), a.p});
  }
  }
}

Scalar Scalar::operator-() const {
  switch (mode()) {
  case RingMode::Rationals:
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  case RingMode::Integers:
    return Scalar(mpz_class(-std::get<mpz_class>(v_)));
  default: {
    const auto &a = std::get<GFpValue>(v_);
    PrimeFieldRing R(a.p);
    return Scalar(GFpValue{R.neg(a.v), a.p});
  }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw domain_error("inverse of zero");
  switch (mode()) {
  case RingMode::Rationals:
    return rational(1 / std::get<mpq_class>(v_));
  case RingMode::Integers: {
    const auto &z = std::get<mpz_class>(v_);
    if (z == 1 || z == -1)
      return Scalar(mpz_class(z));
    throw unsupported_ring_error("integers are not a field");
  }
  default: {
    const auto &a = std::get<GFpValue>(v_);
    PrimeFieldRing R(a.p);
    return Scalar(GFpValue{R.inv(a.v), a.p});
  }
  }
}

bool Scalar::operator==(const Scalar &o) const {
  if (mode() != o.mode())
    return false;
  return v_ == o.v_;
}

std::string Scalar::str() const {
  return std::visit(
      [](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GFpValue>)
          return std::to_string(v.v);
        else
          return v.get_str();
      },
      v_);
}

void SparseRow::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second.is_zero())
      throw domain_error("sparse row stores a zero coefficient");
    if (i > 0 && entries[i - 1].first >= entries[i].first)
      throw domain_error("sparse row columns not strictly increasing");
    if (i > 0 && (entries[i].second.mode() != entries[0].second.mode() ||
                  entries[i].second.characteristic() !=
                      entries[0].second.characteristic()))
      throw ring_mode_error("sparse row mixes ring modes");
  }
}

} // namespace engelnq::exactalg
