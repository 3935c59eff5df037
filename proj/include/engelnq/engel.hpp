#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "engelnq/lie_algebra.hpp"
#include "engelnq/multidegree.hpp"
#include "engelnq/parallel.hpp"
#include "engelnq/snf.hpp"

namespace engelnq::engelgen {

/// One degree-5 Engel relation instance: a basis element y and a multiset of
/// basis elements z_i with multiplicities summing to 5. The row it produces
/// is the sum of [y, w_1, ..., w_5] over the distinct arrangements of the
/// multiset; with `symmetrized` set the row is additionally scaled by the
/// product of the multiplicity factorials, which turns it into the full
/// Sym(5) sum over sequences.
struct EngelInstance {
  std::uint32_t y = 0;
  std::uint8_t num_parts = 0;
  bool symmetrized = false;
  std::array<std::pair<std::uint32_t, std::uint8_t>, 5> parts{};

  long scale() const {
    if (!symmetrized)
      return 1;
    static const long fact[6] = {1, 1, 2, 6, 24, 120};
    long s = 1;
    for (unsigned k = 0; k < num_parts; ++k)
      s *= fact[parts[k].second];
    return s;
  }
};

/// Enumerates instances of total weight `weight`. With `target` set, the
/// multidegree sum must equal *target; otherwise any multidegree admitted by
/// the algebra's truncation qualifies (the layer-by-layer build mode).
/// The set of instances is independent of `reversed`; the flag only flips
/// the enumeration order (used to test order independence).
template <class Ring>
std::vector<EngelInstance>
enumerate_engel_instances(const nqcore::GradedLieAlgebra<Ring> &A,
                          unsigned weight, const MultiDegree *target,
                          nqcore::EngelMode mode, bool reversed = false);

template <class Ring>
SparseVec<Ring> evaluate_engel_instance(nqcore::Multiplier<Ring> &M,
                                        const EngelInstance &inst);

/// The 120-term sum over Sym(5) of [y, x_s(1), ..., x_s(5)].
template <class Ring>
nqcore::LieElement<Ring>
multilinear_engel(const nqcore::GradedLieAlgebra<Ring> &A,
                  const nqcore::LieElement<Ring> &y,
                  const std::array<nqcore::LieElement<Ring>, 5> &xs);

/// Integer relation matrix at one multidegree of a rational algebra with
/// integer structure constants. Row coordinates are positions within the
/// target block (column_basis lists the basis indices).
struct RelationMatrix {
  MultiDegree target;
  std::vector<std::uint32_t> column_basis;
  std::vector<IntRow> rows; // canonically sorted, zero rows dropped
  std::size_t instances = 0;
  std::size_t zero_rows = 0;

  std::size_t num_columns() const { return column_basis.size(); }
};

RelationMatrix
relation_rows(const nqcore::GradedLieAlgebra<RationalRing> &A,
              const MultiDegree &target, unsigned threads = 0,
              bool reversed_enumeration = false);

struct ExperimentCase {
  MultiDegree target;                    // (d_x, 1, ..., 1)
  std::vector<mpz_class> expected_primes; // superset claimed for this case
};

struct PrimesReport {
  MultiDegree target;
  std::size_t dimension = 0;
  unsigned algebra_class = 0;
  std::size_t columns = 0;
  std::size_t instances = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  std::vector<mpz_class> divisors;
  std::vector<mpz_class> primes;
  std::vector<mpz_class> expected_primes;
  bool within_expected = true;
  double wall_seconds = 0;
};

/// Builds the case algebra, generates the relation matrix at the target
/// multidegree, and runs the exact Smith normal form. full_rank means the
/// relations force the whole target layer to vanish except in the
/// characteristics dividing an elementary divisor.
PrimesReport exceptional_primes(const ExperimentCase &c, unsigned threads = 0);

/// Named experiment cases with their expected exceptional-prime supersets.
std::vector<ExperimentCase> known_cases();
std::optional<ExperimentCase> find_case(const MultiDegree &target);

struct GfpTableRow {
  std::uint64_t p = 0;
  unsigned m = 0;
  unsigned cap_x = 0;
  unsigned max_class = 0;
  std::size_t dimension = 0;
  unsigned class_L = 0;
  unsigned class_id_x = 0;
  unsigned max_a = 0;
  unsigned max_x = 0;
  bool x_boundary_ok = false; // max_x strictly below cap_x
  bool a_boundary_ok = false; // max_a strictly below m
  double wall_seconds = 0;
};

/// Builds the GF(p) 5-Engel algebra on x, a_1..a_m (direct enforcement for
/// p > 5, multilinear + power relations for p = 5) and reports the class of
/// the algebra, the class of Id(x), and the maximal number of a-entries.
GfpTableRow gfp_table_row(std::uint64_t p, unsigned m, unsigned cap_x,
                          unsigned max_class, unsigned threads = 0);

/// Default (m, cap_x, max_class) used by the CLI for a given p.
struct GfpPreset {
  unsigned m, cap_x, max_class;
};
GfpPreset gfp_preset(std::uint64_t p);

// --- template implementations ---

template <class Ring>
std::vector<EngelInstance>
enumerate_engel_instances(const nqcore::GradedLieAlgebra<Ring> &A,
                          unsigned weight, const MultiDegree *target,
                          nqcore::EngelMode mode, bool reversed) {
  using nqcore::EngelMode;
  std::vector<EngelInstance> out;
  if (mode == EngelMode::None || weight < 6)
    return out;
  const auto &basis = A.basis();
  const std::size_t dim = basis.size();
  const bool symmetrized = (mode == EngelMode::Multilinear ||
                            mode == EngelMode::MultilinearPlusPower);
  std::uint64_t p = 0;
  if constexpr (Ring::kIsPrimeField)
    p = A.ring().p;

  EngelInstance inst;
  inst.symmetrized = symmetrized;

  auto emit_with_y = [&](unsigned parts, unsigned used_weight,
                         const MultiDegree &used_md) {
    unsigned wy = weight - used_weight;
    inst.num_parts = static_cast<std::uint8_t>(parts);
    if (target) {
      MultiDegree need = *target - used_md; // throws if not dominated
      for (auto y : A.block(need)) {
        if (basis[y].weight != wy)
          continue;
        inst.y = y;
        out.push_back(inst);
      }
    } else {
      for (auto y : A.weight_layer(wy)) {
        MultiDegree sum = basis[y].md + used_md;
        if (!A.presentation().trunc.admits(sum))
          continue;
        inst.y = y;
        out.push_back(inst);
      }
    }
  };

  // choose distinct z's ascending with multiplicities summing to 5
  auto rec = [&](auto &&self, std::size_t z_from, unsigned parts,
                 unsigned mult_left, unsigned used_weight,
                 const MultiDegree &used_md) -> void {
    if (mult_left == 0) {
      if (used_weight + 1 <= weight)
        emit_with_y(parts, used_weight, used_md);
      return;
    }
    for (std::size_t z = z_from; z < dim; ++z) {
      unsigned wz = basis[z].weight;
      if (used_weight + wz + 1 > weight)
        break; // weights ascend with the index
      for (unsigned mult = 1; mult <= mult_left; ++mult) {
        unsigned w2 = used_weight + mult * wz;
        if (w2 + (mult_left - mult) + 1 > weight)
          break;
        MultiDegree md2 = used_md;
        for (unsigned r = 0; r < mult; ++r)
          md2 += basis[z].md;
        if (target) {
          if (!target->dominates(md2))
            break; // more copies only grow it
        } else if (!A.presentation().trunc.admits(md2)) {
          break;
        }
        inst.parts[parts] = {static_cast<std::uint32_t>(z),
                             static_cast<std::uint8_t>(mult)};
        self(self, z + 1, parts + 1, mult_left - mult, w2, md2);
      }
    }
  };
  rec(rec, 0, 0, 5, 0, MultiDegree(basis[0].md.size()));

  if (mode == EngelMode::MultilinearPlusPower) {
    // plain power instances [y, z, z, z, z, z], unscaled
    EngelInstance pw;
    pw.symmetrized = false;
    pw.num_parts = 1;
    for (std::size_t z = 0; z < dim; ++z) {
      unsigned wz = basis[z].weight;
      if (5 * wz + 1 > weight)
        break;
      MultiDegree md5(basis[z].md.size());
      for (unsigned r = 0; r < 5; ++r)
        md5 += basis[z].md;
      if (target ? !target->dominates(md5)
                 : !A.presentation().trunc.admits(md5))
        continue;
      pw.parts[0] = {static_cast<std::uint32_t>(z), 5};
      unsigned wy = weight - 5 * wz;
      if (target) {
        MultiDegree need = *target - md5;
        for (auto y : A.block(need)) {
          if (basis[y].weight != wy)
            continue;
          pw.y = y;
          out.push_back(pw);
        }
      } else {
        for (auto y : A.weight_layer(wy)) {
          MultiDegree sum = basis[y].md + md5;
          if (!A.presentation().trunc.admits(sum))
            continue;
          pw.y = y;
          out.push_back(pw);
        }
      }
    }
  }

  // drop instances whose symmetrization factor vanishes in the coefficient
  // field (e.g. the scaled [y, z^5] sum in characteristic 5)
  if (symmetrized && p) {
    std::vector<EngelInstance> kept;
    kept.reserve(out.size());
    for (const auto &i : out)
      if (static_cast<std::uint64_t>(i.scale()) % p != 0)
        kept.push_back(i);
    out = std::move(kept);
  }

  if (reversed)
    std::reverse(out.begin(), out.end());
  return out;
}

template <class Ring>
SparseVec<Ring> evaluate_engel_instance(nqcore::Multiplier<Ring> &M,
                                        const EngelInstance &inst) {
  const Ring &R = M.algebra().ring();
  nqcore::Accumulator<Ring> acc(R);
  std::array<std::uint8_t, 5> rem{};
  for (unsigned k = 0; k < inst.num_parts; ++k)
    rem[k] = inst.parts[k].second;

  auto rec = [&](auto &&self, const SparseVec<Ring> &u,
                 unsigned placed) -> void {
    if (placed == 5) {
      acc.add(u);
      return;
    }
    for (unsigned k = 0; k < inst.num_parts; ++k) {
      if (rem[k] == 0)
        continue;
      --rem[k];
      SparseVec<Ring> next = M.mul_vec_basis(u, inst.parts[k].first);
      if (!next.empty())
        self(self, next, placed + 1);
      ++rem[k];
    }
  };
  rec(rec, SparseVec<Ring>::unit(R, inst.y), 0);
  SparseVec<Ring> row = acc.extract();
  long s = inst.scale();
  if (s != 1)
    row = scale(R, row, R.from_long(s));
  return row;
}

template <class Ring>
nqcore::LieElement<Ring>
multilinear_engel(const nqcore::GradedLieAlgebra<Ring> &A,
                  const nqcore::LieElement<Ring> &y,
                  const std::array<nqcore::LieElement<Ring>, 5> &xs) {
  if (y.owner != &A)
    throw ownership_error("element belongs to a different algebra");
  for (const auto &x : xs)
    if (x.owner != &A)
      throw ownership_error("element belongs to a different algebra");
  nqcore::Multiplier<Ring> M(A);
  nqcore::Accumulator<Ring> acc(A.ring());
  auto rec = [&](auto &&self, const SparseVec<Ring> &u,
                 unsigned used) -> void {
    if (used == 0x1f) {
      acc.add(u);
      return;
    }
    for (unsigned k = 0; k < 5; ++k) {
      if (used & (1u << k))
        continue;
      SparseVec<Ring> next = M.mul(u, xs[k].vec);
      if (!next.empty())
        self(self, next, used | (1u << k));
    }
  };
  rec(rec, y.vec, 0);
  return {&A, acc.extract()};
}

} // namespace engelnq::engelgen
