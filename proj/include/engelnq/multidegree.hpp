#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "engelnq/errors.hpp"

namespace engelnq {

/// Exponent vector of a Lie product: position 0 counts the distinguished
/// generator x, positions 1..m count a_1..a_m.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t len) : e_(len, 0) {}
  explicit MultiDegree(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

  static MultiDegree unit(std::size_t len, std::size_t pos) {
    MultiDegree d(len);
    d.e_[pos] = 1;
    return d;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v) { e_[i] = static_cast<std::uint16_t>(v); }

  unsigned weight() const {
    unsigned w = 0;
    for (auto v : e_)
      w += v;
    return w;
  }

  MultiDegree operator+(const MultiDegree &o) const {
    if (size() != o.size())
      throw domain_error("multidegree length mismatch");
    MultiDegree r(size());
    for (std::size_t i = 0; i < size(); ++i)
      r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    return r;
  }

  MultiDegree &operator+=(const MultiDegree &o) {
    if (size() != o.size())
      throw domain_error("multidegree length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
      e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    return *this;
  }

  // Componentwise difference; throws if any component would go negative.
  MultiDegree operator-(const MultiDegree &o) const {
    if (size() != o.size())
      throw domain_error("multidegree length mismatch");
    MultiDegree r(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (o.e_[i] > e_[i])
        throw domain_error("multidegree difference not defined");
      r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    }
    return r;
  }

  bool dominates(const MultiDegree &o) const {
    if (size() != o.size())
      return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (o.e_[i] > e_[i])
        return false;
    return true;
  }

  bool operator==(const MultiDegree &o) const { return e_ == o.e_; }
  bool operator!=(const MultiDegree &o) const { return e_ != o.e_; }
  bool operator<(const MultiDegree &o) const { return e_ < o.e_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(e_[i]);
    }
    return s;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : e_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

  const std::vector<std::uint16_t> &exponents() const { return e_; }

private:
  std::vector<std::uint16_t> e_;
};

struct MdHash {
  std::size_t operator()(const MultiDegree &d) const {
    return static_cast<std::size_t>(d.hash());
  }
};

/// Multidegree caps: any product whose multidegree exceeds a cap vanishes.
struct TruncationSpec {
  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

  unsigned cap_x = kUnbounded; // max exponent of the distinguished generator
  unsigned cap_a = kUnbounded; // max exponent of each remaining generator
  unsigned max_class = 1;      // max total weight

  bool admits(const MultiDegree &d) const {
    if (d.weight() > max_class)
      return false;
    if (d.size() > 0 && d[0] > cap_x)
      return false;
    for (std::size_t i = 1; i < d.size(); ++i)
      if (d[i] > cap_a)
        return false;
    return true;
  }
};

} // namespace engelnq
