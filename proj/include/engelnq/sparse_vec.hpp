#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace engelnq {

/// Sparse vector over a ring policy: (index, coefficient) pairs with strictly
/// increasing indices and no stored zeros.
template <class Ring> struct SparseVec {
  using Elem = typename Ring::Elem;
  std::vector<std::pair<std::uint32_t, Elem>> t;

  bool empty() const { return t.empty(); }
  std::size_t size() const { return t.size(); }
  void clear() { t.clear(); }

  static SparseVec unit(const Ring &R, std::uint32_t idx) {
    SparseVec v;
    v.t.emplace_back(idx, R.one());
    return v;
  }

  bool operator==(const SparseVec &o) const { return t == o.t; }
};

/// dst := a + c*b  (c nonzero)
template <class Ring>
SparseVec<Ring> add_scaled(const Ring &R, const SparseVec<Ring> &a,
                           const typename Ring::Elem &c,
                           const SparseVec<Ring> &b) {
  SparseVec<Ring> r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first < b.t[j].first) {
      r.t.push_back(a.t[i++]);
    } else if (a.t[i].first > b.t[j].first) {
      r.t.emplace_back(b.t[j].first, R.mul(c, b.t[j].second));
      ++j;
    } else {
      auto v = R.add(a.t[i].second, R.mul(c, b.t[j].second));
      if (!R.is_zero(v))
        r.t.emplace_back(a.t[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i)
    r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j)
    r.t.emplace_back(b.t[j].first, R.mul(c, b.t[j].second));
  return r;
}

template <class Ring>
SparseVec<Ring> add(const Ring &R, const SparseVec<Ring> &a,
                    const SparseVec<Ring> &b) {
  return add_scaled(R, a, R.one(), b);
}

template <class Ring>
SparseVec<Ring> sub(const Ring &R, const SparseVec<Ring> &a,
                    const SparseVec<Ring> &b) {
  return add_scaled(R, a, R.neg(R.one()), b);
}

template <class Ring>
SparseVec<Ring> scale(const Ring &R, const SparseVec<Ring> &a,
                      const typename Ring::Elem &c) {
  SparseVec<Ring> r;
  if (R.is_zero(c))
    return r;
  r.t.reserve(a.t.size());
  for (const auto &[i, v] : a.t)
    r.t.emplace_back(i, R.mul(c, v));
  return r;
}

template <class Ring>
SparseVec<Ring> negate(const Ring &R, const SparseVec<Ring> &a) {
  SparseVec<Ring> r;
  r.t.reserve(a.t.size());
  for (const auto &[i, v] : a.t)
    r.t.emplace_back(i, R.neg(v));
  return r;
}

} // namespace engelnq
