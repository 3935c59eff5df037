#include "engelnq/echelon.hpp"

namespace engelnq::exactalg {

namespace {

template <class Ring, class ToElem, class ToScalar>
std::pair<std::vector<SparseRow>, std::vector<std::size_t>>
run(const Ring &R, const std::vector<SparseRow> &rows, ToElem to_elem,
    ToScalar to_scalar) {
  Echelon<Ring> ech(R);
  for (const auto &row : rows) {
    SparseVec<Ring> v;
    v.t.reserve(row.entries.size());
    for (const auto &[col, s] : row.entries)
      v.t.emplace_back(static_cast<std::uint32_t>(col), to_elem(s));
    ech.insert(std::move(v));
  }
  ech.finalize();

  std::pair<std::vector<SparseRow>, std::vector<std::size_t>> out;
  for (const auto &v : ech.rows()) {
    SparseRow r;
    r.entries.reserve(v.t.size());
    for (const auto &[col, e] : v.t)
      r.entries.emplace_back(col, to_scalar(e));
    out.first.push_back(std::move(r));
  }
  for (auto c : ech.pivot_columns())
    out.second.push_back(c);
  return out;
}

} // namespace

std::pair<std::vector<SparseRow>, std::vector<std::size_t>>
echelonize(const std::vector<SparseRow> &rows) {
  RingMode mode = RingMode::Rationals;
  std::uint64_t p = 0;
  bool seen = false;
  for (const auto &row : rows) {
    row.validate();
    if (row.entries.empty())
      continue;
    const Scalar &s = row.entries.front().second;
    if (!seen) {
      mode = s.mode();
      p = s.characteristic();
      seen = true;
    } else if (s.mode() != mode || s.characteristic() != p) {
      throw ring_mode_error("echelonize: rows mix ring modes");
    }
  }
  if (!seen)
    return {};
  if (mode == RingMode::Integers)
    throw unsupported_ring_error(
        "echelonize requires a field (rationals or a prime field)");

  if (mode == RingMode::Rationals) {
    RationalRing R;
    return run(
        R, rows, [](const Scalar &s) { return s.rational_value(); },
        [](const mpq_class &q) { return Scalar::rational(q); });
  }
  PrimeFieldRing R(p);
  return run(
      R, rows, [](const Scalar &s) { return s.residue_value(); },
      [p](std::uint64_t v) {
        return Scalar::gf(p, static_cast<long>(v));
      });
}

} // namespace engelnq::exactalg
