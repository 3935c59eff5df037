#include "engelnq/nq_build.hpp"

#include <cassert>
#include <map>

#include "engelnq/engel.hpp"
#include "engelnq/parallel.hpp"

namespace engelnq::nqcore {

// Survivors of a layer are the earliest candidates in (parent, generator)
// order; relation pivots eliminate the latest candidate they touch. This is
// realized by echelonizing over reversed candidate coordinates.
constexpr bool kEliminateLatest = true;

namespace {
struct Candidate {
  std::uint32_t parent;
  std::uint32_t gen;
  MultiDegree md;
};
} // namespace

template <class Ring> class AlgebraBuilder {
public:
  using Vec = SparseVec<Ring>;
  using Elem = typename Ring::Elem;

  AlgebraBuilder(const Presentation &pres, Ring ring, unsigned threads)
      : A_(pres, ring), R_(ring),
        threads_(threads ? threads : default_threads()) {}

  GradedLieAlgebra<Ring> run() {
    const Presentation &pres = A_.pres_;
    const unsigned ngens = A_.ngens_;
    for (unsigned c = 2; c <= pres.trunc.max_class; ++c) {
      const std::size_t dim0 = A_.basis_.size();

      std::vector<Candidate> cands;
      for (std::uint32_t i : A_.by_weight_[c - 1]) {
        for (std::uint32_t g = 0; g < ngens; ++g) {
          if (c == 2 && i <= g)
            continue;
          Vec &slot = A_.gen_table_[static_cast<std::size_t>(i) * ngens + g];
          MultiDegree md = A_.basis_[i].md + A_.basis_[g].md;
          if (!pres.trunc.admits(md)) {
            slot.clear();
            continue;
          }
          slot = Vec::unit(R_, static_cast<std::uint32_t>(dim0 + cands.size()));
          cands.push_back({i, g, std::move(md)});
        }
      }
      if (cands.empty())
        break;

      std::vector<Vec> rows = relation_layer(c, dim0, cands);
      std::size_t survivors = eliminate_layer(c, dim0, cands, rows);
      if (survivors == 0)
        break;
      A_.class_ = c;
    }
    return std::move(A_);
  }

private:
  std::vector<Vec> relation_layer(unsigned c, std::size_t dim0,
                                  const std::vector<Candidate> &cands) {
    const Presentation &pres = A_.pres_;
    const unsigned ngens = A_.ngens_;

    struct Job {
      enum class Kind : std::uint8_t { Jacobi, Engel } kind;
      std::uint32_t u, v, g;
      std::size_t engel_index;
    };
    std::vector<Job> jobs;

    // Jacobi instances J(u, v, g) over all sorted triples g < v < u whose
    // smallest member is a generator; checking only generator pairs (two
    // weight-1 arguments) misses relations between candidates whose parents
    // interact, e.g. between [a,x,x,x,b] and [b,x,x,x,a] at weight 5.
    if (c >= 3) {
      for (unsigned wu = (c - 1 + 1) / 2; wu <= c - 2; ++wu) {
        unsigned wv = c - 1 - wu;
        for (std::uint32_t u : A_.by_weight_[wu]) {
          for (std::uint32_t v : A_.by_weight_[wv]) {
            if (v >= u)
              break;
            // J(u, v, g) vanishes identically when [v, g] is the definition
            // of a basis element with index below u: the term [[v,g],u] is
            // then evaluated by the collection rule, which builds the
            // identity in.
            std::uint32_t gmax = std::min(v, ngens);
            for (std::uint32_t g = 0; g < gmax; ++g) {
              const Vec &vg =
                  A_.gen_table_[static_cast<std::size_t>(v) * ngens + g];
              if (vg.t.size() == 1 && vg.t.front().first < u) {
                const BasisDef &d = A_.basis_[vg.t.front().first].def;
                if (d.kind == BasisDef::Kind::Commutator && d.parent == v &&
                    d.gen == g &&
                    R_.is_zero(R_.sub(vg.t.front().second, R_.one())))
                  continue;
              }
              jobs.push_back({Job::Kind::Jacobi, u, v, g, 0});
            }
          }
        }
      }
    }

    std::vector<engelgen::EngelInstance> engel;
    if (pres.engel.mode != EngelMode::None) {
      engel = engelgen::enumerate_engel_instances(A_, c, nullptr,
                                                  pres.engel.mode);
      for (std::size_t k = 0; k < engel.size(); ++k)
        jobs.push_back({Job::Kind::Engel, 0, 0, 0, k});
    }

    std::vector<Vec> rows(jobs.size());
    parallel_jobs(
        jobs.size(), threads_,
        [&] { return Multiplier<Ring>(A_, c, dim0); },
        [&](Multiplier<Ring> &M, std::size_t idx) {
          const Job &job = jobs[idx];
          if (job.kind == Job::Kind::Jacobi) {
            Accumulator<Ring> acc(R_);
            acc.add(M.mul_vec_basis(M.bracket(job.u, job.v), job.g));
            acc.add(M.mul_vec_basis(M.bracket(job.v, job.g), job.u));
            acc.add(M.mul_vec_basis(M.bracket(job.g, job.u), job.v));
            rows[idx] = acc.extract();
          } else {
            rows[idx] = engelgen::evaluate_engel_instance(M, engel[job.engel_index]);
          }
        });

    if (c == 2) {
      for (auto [i, j] : pres.commuting_pairs) {
        std::uint32_t hi = std::max(i, j), lo = std::min(i, j);
        rows.push_back(A_.gen_table_[static_cast<std::size_t>(hi) * ngens + lo]);
      }
    }
    for (const auto &word : pres.left_normed_zero) {
      if (word.size() != c)
        continue;
      Multiplier<Ring> M(A_, c, dim0);
      Vec u = Vec::unit(R_, word[0]);
      for (std::size_t k = 1; k < word.size() && !u.empty(); ++k)
        u = M.mul_vec_basis(u, word[k]);
      rows.push_back(std::move(u));
    }

#ifndef NDEBUG
    for (const auto &row : rows)
      for (const auto &[idx, coeff] : row.t)
        assert(idx >= dim0 && idx < dim0 + cands.size());
#endif
    (void)cands;
    return rows;
  }

  std::size_t eliminate_layer(unsigned c, std::size_t dim0,
                              const std::vector<Candidate> &cands,
                              std::vector<Vec> &rows) {
    // group candidate ordinals and rows by multidegree
    std::map<MultiDegree, std::vector<std::uint32_t>> block_cands;
    for (std::size_t k = 0; k < cands.size(); ++k)
      block_cands[cands[k].md].push_back(static_cast<std::uint32_t>(k));

    std::map<MultiDegree, std::vector<Vec>> block_rows;
    for (auto &row : rows) {
      if (row.empty())
        continue;
      const MultiDegree &md = cands[row.t.front().first - dim0].md;
      block_rows[md].push_back(std::move(row));
    }
    rows.clear();

    std::vector<char> eliminated(cands.size(), 0);
    // expansion of an eliminated candidate over surviving candidate ordinals
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> expansion(
        cands.size());

    for (auto &[md, ords] : block_cands) {
      auto rit = block_rows.find(md);
      if (rit == block_rows.end())
        continue;
      const std::uint32_t B = static_cast<std::uint32_t>(ords.size());
      std::unordered_map<std::uint32_t, std::uint32_t> local_of_ord;
      for (std::uint32_t k = 0; k < B; ++k)
        local_of_ord[ords[k]] = k;

      Echelon<Ring> ech(R_);
      for (auto &row : rit->second) {
        Vec v;
        v.t.reserve(row.t.size());
        for (const auto &[idx, coeff] : row.t) {
          std::uint32_t local =
              local_of_ord.at(static_cast<std::uint32_t>(idx - dim0));
          std::uint32_t col = kEliminateLatest ? (B - 1 - local) : local;
          v.t.emplace_back(col, coeff);
        }
        if (kEliminateLatest)
          std::reverse(v.t.begin(), v.t.end());
        ech.insert(std::move(v));
      }
      ech.finalize();

      for (const auto &r : ech.rows()) {
        std::uint32_t lead_col = r.t.front().first;
        std::uint32_t lead_local = kEliminateLatest ? (B - 1 - lead_col) : lead_col;
        std::uint32_t ord = ords[lead_local];
        eliminated[ord] = 1;
        auto &exp = expansion[ord];
        exp.reserve(r.t.size() - 1);
        for (std::size_t k = 1; k < r.t.size(); ++k) {
          std::uint32_t local =
              kEliminateLatest ? (B - 1 - r.t[k].first) : r.t[k].first;
          exp.emplace_back(ords[local], R_.neg(r.t[k].second));
        }
        std::sort(exp.begin(), exp.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
      }
    }

    // assign final indices to survivors in candidate order
    std::vector<std::uint32_t> final_index(cands.size(), 0);
    std::size_t survivors = 0;
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (!eliminated[k])
        final_index[k] = static_cast<std::uint32_t>(dim0 + survivors++);

    std::vector<Vec> remap(cands.size());
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (!eliminated[k]) {
        remap[k] = Vec::unit(R_, final_index[k]);
        continue;
      }
      Vec v;
      v.t.reserve(expansion[k].size());
      for (const auto &[ord, coeff] : expansion[k])
        v.t.emplace_back(final_index[ord], coeff);
      remap[k] = std::move(v);
    }

    const unsigned ngens = A_.ngens_;
    for (std::size_t k = 0; k < cands.size(); ++k)
      A_.gen_table_[static_cast<std::size_t>(cands[k].parent) * ngens +
                    cands[k].gen] = remap[k];

    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (eliminated[k])
        continue;
      BasisElement be;
      be.weight = c;
      be.md = cands[k].md;
      be.def = {BasisDef::Kind::Commutator, cands[k].parent, cands[k].gen};
      A_.append_element(std::move(be));
    }
    return survivors;
  }

  GradedLieAlgebra<Ring> A_;
  Ring R_;
  unsigned threads_;
};

RationalAlgebra build_rational(const Presentation &pres, unsigned threads) {
  pres.validate();
  if (pres.ring != RingSpec::Rationals)
    throw ring_mode_error("presentation is not over the rationals");
  return AlgebraBuilder<RationalRing>(pres, RationalRing{}, threads).run();
}

GFpAlgebra build_gfp(const Presentation &pres, unsigned threads) {
  pres.validate();
  if (pres.ring != RingSpec::PrimeField)
    throw ring_mode_error("presentation is not over a prime field");
  return AlgebraBuilder<PrimeFieldRing>(pres, PrimeFieldRing(pres.p), threads)
      .run();
}

AlgebraVariant build(const Presentation &pres, unsigned threads) {
  if (pres.ring == RingSpec::Rationals)
    return build_rational(pres, threads);
  return build_gfp(pres, threads);
}

} // namespace engelnq::nqcore
