#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "engelnq/echelon.hpp"
#include "engelnq/errors.hpp"
#include "engelnq/multidegree.hpp"
#include "engelnq/presentation.hpp"
#include "engelnq/rings.hpp"
#include "engelnq/sparse_vec.hpp"

namespace engelnq::nqcore {

struct BasisDef {
  enum class Kind : std::uint8_t { Generator, Commutator };
  Kind kind = Kind::Generator;
  std::uint32_t parent = 0; // for Commutator: [b_parent, g_gen]
  std::uint32_t gen = 0;
};

struct BasisElement {
  std::uint32_t index = 0; // 0-based; reports print index + 1
  unsigned weight = 1;
  MultiDegree md;
  BasisDef def;
};

template <class Ring> class GradedLieAlgebra;
template <class Ring> class Multiplier;

/// Element of a graded Lie algebra: sparse coefficients over the basis,
/// tagged with the owning algebra.
template <class Ring> struct LieElement {
  const GradedLieAlgebra<Ring> *owner = nullptr;
  SparseVec<Ring> vec;

  bool is_zero() const { return vec.empty(); }
};

/// Coefficient accumulator for bilinear expansion.
template <class Ring> class Accumulator {
public:
  using Elem = typename Ring::Elem;

  explicit Accumulator(const Ring &R) : R_(R) {}

  void add_scaled(const Elem &c, const SparseVec<Ring> &v) {
    for (const auto &[i, x] : v.t) {
      auto [it, inserted] = m_.try_emplace(i, R_.mul(c, x));
      if (!inserted)
        it->second = R_.add(it->second, R_.mul(c, x));
    }
  }

  void sub_scaled(const Elem &c, const SparseVec<Ring> &v) {
    add_scaled(R_.neg(c), v);
  }

  void add(const SparseVec<Ring> &v) { add_scaled(R_.one(), v); }

  SparseVec<Ring> extract() {
    SparseVec<Ring> out;
    out.t.reserve(m_.size());
    for (auto &[i, x] : m_)
      if (!R_.is_zero(x))
        out.t.emplace_back(i, std::move(x));
    std::sort(out.t.begin(), out.t.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    m_.clear();
    return out;
  }

private:
  Ring R_;
  std::unordered_map<std::uint32_t, Elem> m_;
};

/// The computed object: a weighted basis with definitions, and the products
/// [b_i, g] for every basis element i and generator g. Products with a
/// composite right factor are resolved through the definition recursion
/// [u,[v,g]] = [[u,v],g] - [[u,g],v]; Multiplier memoizes them.
template <class Ring> class GradedLieAlgebra {
public:
  using Vec = SparseVec<Ring>;
  using Elem = typename Ring::Elem;

  GradedLieAlgebra(Presentation pres, Ring ring)
      : pres_(std::move(pres)), ring_(ring),
        ngens_(pres_.num_generators()) {
    for (unsigned g = 0; g < ngens_; ++g) {
      BasisElement be;
      be.index = g;
      be.weight = 1;
      be.md = MultiDegree::unit(ngens_, g);
      be.def = {BasisDef::Kind::Generator, 0, g};
      append_element(std::move(be));
    }
    class_ = 1;
  }

  const Presentation &presentation() const { return pres_; }
  const Ring &ring() const { return ring_; }
  unsigned num_generators() const { return ngens_; }
  std::size_t dimension() const { return basis_.size(); }
  unsigned nilpotency_class() const { return class_; }
  const std::vector<BasisElement> &basis() const { return basis_; }

  const std::vector<std::uint32_t> &weight_layer(unsigned w) const {
    static const std::vector<std::uint32_t> kEmpty;
    if (w >= by_weight_.size())
      return kEmpty;
    return by_weight_[w];
  }

  const std::vector<std::uint32_t> &block(const MultiDegree &md) const {
    static const std::vector<std::uint32_t> kEmpty;
    auto it = blocks_.find(md);
    return it == blocks_.end() ? kEmpty : it->second;
  }

  /// Tabulated product [b_i, g] (i > g required, g a generator).
  const Vec &generator_product(std::uint32_t i, std::uint32_t g) const {
    return gen_table_[static_cast<std::size_t>(i) * ngens_ + g];
  }

  LieElement<Ring> zero() const { return {this, {}}; }

  LieElement<Ring> generator(unsigned g) const {
    if (g >= ngens_)
      throw domain_error("unknown generator index");
    return {this, Vec::unit(ring_, g)};
  }

  LieElement<Ring> basis_element(std::uint32_t i) const {
    if (i >= basis_.size())
      throw domain_error("basis index out of range");
    return {this, Vec::unit(ring_, i)};
  }

  LieElement<Ring> element(Vec v) const {
    for (const auto &[i, c] : v.t)
      if (i >= basis_.size())
        throw domain_error("coefficient index out of range");
    return {this, std::move(v)};
  }

  LieElement<Ring> multiply(const LieElement<Ring> &u,
                            const LieElement<Ring> &v) const;

  LieElement<Ring> left_normed(std::span<const LieElement<Ring>> factors) const;

  unsigned ideal_class(unsigned gen) const;
  unsigned ideal_class(const std::string &gen_name) const {
    return ideal_class(pres_.generator_index(gen_name));
  }

  /// Max over nonzero basis elements of the total degree in a_1..a_m.
  unsigned max_a_entries() const {
    unsigned best = 0;
    for (const auto &b : basis_) {
      unsigned s = 0;
      for (std::size_t i = 1; i < b.md.size(); ++i)
        s += b.md[i];
      best = std::max(best, s);
    }
    return best;
  }

  unsigned max_x_entries() const {
    unsigned best = 0;
    for (const auto &b : basis_)
      if (b.md.size())
        best = std::max(best, b.md[0]);
    return best;
  }

  bool structure_constants_integral() const {
    for (const auto &v : gen_table_)
      for (const auto &[i, c] : v.t)
        if (!ring_.is_integral(c))
          return false;
    return true;
  }

  /// Structure table dump: header, then one line "i j : k:c ..." per
  /// tabulated (basis, generator) pair, 1-based indices, canonical order.
  void export_table(std::ostream &os) const;

  std::string render(const LieElement<Ring> &e) const {
    if (e.vec.empty())
      return "0";
    std::string s;
    for (const auto &[i, c] : e.vec.t) {
      if (!s.empty())
        s += " + ";
      s += ring_.str(c) + "*b" + std::to_string(i + 1);
    }
    return s;
  }

private:
  friend class Multiplier<Ring>;
  template <class R> friend class AlgebraBuilder;

  void append_element(BasisElement be) {
    be.index = static_cast<std::uint32_t>(basis_.size());
    if (by_weight_.size() <= be.weight)
      by_weight_.resize(be.weight + 1);
    by_weight_[be.weight].push_back(be.index);
    blocks_[be.md].push_back(be.index);
    basis_.push_back(std::move(be));
    gen_table_.resize(basis_.size() * ngens_);
  }

  Presentation pres_;
  Ring ring_;
  unsigned ngens_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<Vec> gen_table_; // [i * ngens_ + g]
  std::vector<std::vector<std::uint32_t>> by_weight_;
  std::unordered_map<MultiDegree, std::vector<std::uint32_t>, MdHash> blocks_;
  unsigned class_ = 0;
};

/// Product engine with a per-instance memo for composite right factors.
/// Create one per worker thread; results are identical regardless of which
/// instance computes them.
template <class Ring> class Multiplier {
public:
  using Vec = SparseVec<Ring>;
  using Elem = typename Ring::Elem;

  explicit Multiplier(const GradedLieAlgebra<Ring> &A)
      : A_(A), R_(A.ring_), frontier_(A.class_), committed_(A.basis_.size()) {}

  /// Build-phase view: indices >= committed are candidate coordinates of
  /// weight `frontier`.
  Multiplier(const GradedLieAlgebra<Ring> &A, unsigned frontier,
             std::size_t committed)
      : A_(A), R_(A.ring_), frontier_(frontier), committed_(committed) {}

  const GradedLieAlgebra<Ring> &algebra() const { return A_; }

  unsigned weight_of(std::uint32_t i) const {
    return i < committed_ ? A_.basis_[i].weight : frontier_;
  }

  /// [b_i, b_j] for any pair, with antisymmetry applied.
  Vec bracket(std::uint32_t i, std::uint32_t j) {
    if (i == j)
      return {};
    if (i > j)
      return bracket_pos(i, j);
    return negate(R_, bracket_pos(j, i));
  }

  /// u * b_j for a coefficient vector u.
  Vec mul_vec_basis(const Vec &u, std::uint32_t j) {
    Accumulator<Ring> acc(R_);
    unsigned wj = weight_of(j);
    for (const auto &[i, c] : u.t) {
      if (i == j)
        continue;
      if (weight_of(i) + wj > frontier_)
        continue;
      if (i > j)
        acc.add_scaled(c, bracket_pos(i, j));
      else
        acc.sub_scaled(c, bracket_pos(j, i));
    }
    return acc.extract();
  }

  Vec mul(const Vec &u, const Vec &v) {
    Accumulator<Ring> acc(R_);
    for (const auto &[j, c] : v.t) {
      Vec w = mul_vec_basis(u, j);
      acc.add_scaled(c, w);
    }
    return acc.extract();
  }

  void clear_cache() { cache_.clear(); }
  std::size_t cache_size() const { return cache_.size(); }

private:
  /// [b_i, b_j] for i > j. Generator right factors are table lookups;
  /// composite ones recurse through the definition and are memoized.
  const Vec &bracket_pos(std::uint32_t i, std::uint32_t j) {
    if (j < A_.ngens_)
      return A_.gen_table_[static_cast<std::size_t>(i) * A_.ngens_ + j];
    if (weight_of(i) + weight_of(j) > frontier_) {
      static const Vec kZero;
      return kZero;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;

    const BasisDef &def = A_.basis_[j].def;
    // j = [b_p, g]; [b_i, b_j] = [[b_i, b_p], g] - [[b_i, g], b_p]
    Vec a = mul_vec_basis(bracket_pos(i, def.parent), def.gen);
    Vec b = mul_vec_basis(
        A_.gen_table_[static_cast<std::size_t>(i) * A_.ngens_ + def.gen],
        def.parent);
    Vec res = sub(R_, a, b);
    return cache_.emplace(key, std::move(res)).first->second;
  }

  const GradedLieAlgebra<Ring> &A_;
  Ring R_;
  unsigned frontier_;
  std::size_t committed_;
  std::unordered_map<std::uint64_t, Vec> cache_;
};

template <class Ring>
LieElement<Ring>
GradedLieAlgebra<Ring>::multiply(const LieElement<Ring> &u,
                                 const LieElement<Ring> &v) const {
  if (u.owner != this || v.owner != this)
    throw ownership_error("elements belong to a different algebra");
  Multiplier<Ring> M(*this);
  return {this, M.mul(u.vec, v.vec)};
}

template <class Ring>
LieElement<Ring> GradedLieAlgebra<Ring>::left_normed(
    std::span<const LieElement<Ring>> factors) const {
  if (factors.empty())
    throw domain_error("left_normed needs at least one factor");
  for (const auto &f : factors)
    if (f.owner != this)
      throw ownership_error("elements belong to a different algebra");
  Multiplier<Ring> M(*this);
  Vec acc = factors.front().vec;
  for (std::size_t k = 1; k < factors.size() && !acc.empty(); ++k)
    acc = M.mul(acc, factors[k].vec);
  return {this, std::move(acc)};
}

template <class Ring>
unsigned GradedLieAlgebra<Ring>::ideal_class(unsigned gen) const {
  if (gen >= ngens_)
    throw domain_error("unknown generator index");
  Multiplier<Ring> M(*this);

  Echelon<Ring> layer(ring_);
  for (const auto &b : basis_)
    if (b.md[gen] >= 1)
      layer.insert(Vec::unit(ring_, b.index));
  if (layer.rank() == 0)
    return 0;

  unsigned k = 1;
  while (k <= pres_.trunc.max_class) {
    // next term: ideal closure of [current, gen]
    Echelon<Ring> next(ring_);
    std::vector<Vec> queue;
    for (const auto &row : layer.rows()) {
      Vec w = M.mul_vec_basis(row, gen);
      if (next.insert(w))
        queue.push_back(next.rows().back());
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vec v = queue[qi];
      for (unsigned g = 0; g < ngens_; ++g) {
        Vec w = M.mul_vec_basis(v, g);
        if (next.insert(w))
          queue.push_back(next.rows().back());
      }
    }
    if (next.rank() == 0)
      return k;
    layer = std::move(next);
    ++k;
  }
  return k;
}

template <class Ring>
void GradedLieAlgebra<Ring>::export_table(std::ostream &os) const {
  os << "engelnq table v1\n";
  if constexpr (Ring::kIsPrimeField)
    os << "ring GF " << ring_.p << "\n";
  else
    os << "ring Q\n";
  os << "dimension " << basis_.size() << "\n";
  os << "class " << class_ << "\n";
  os << "generators " << ngens_ << "\n";
  for (unsigned g = 0; g < ngens_; ++g)
    os << "gen " << (g + 1) << ' ' << pres_.gen_names[g] << ' '
       << basis_[g].md.str() << "\n";
  for (std::size_t i = 1; i < basis_.size(); ++i) {
    for (unsigned g = 0; g < ngens_ && g < i; ++g) {
      os << (i + 1) << ' ' << (g + 1) << " :";
      for (const auto &[k, c] : generator_product(static_cast<std::uint32_t>(i), g).t) {
        if constexpr (Ring::kIsPrimeField) {
          os << ' ' << (k + 1) << ':' << c;
        } else {
          if (!ring_.is_integral(c))
            throw integrality_error(
                "structure constant [" + std::to_string(i + 1) + "," +
                std::to_string(g + 1) + "] is not an integer: " +
                ring_.str(c));
          os << ' ' << (k + 1) << ':' << c.get_num().get_str();
        }
      }
      os << "\n";
    }
  }
}

} // namespace engelnq::nqcore
