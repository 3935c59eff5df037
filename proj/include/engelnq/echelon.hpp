#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "engelnq/rings.hpp"
#include "engelnq/scalar.hpp"
#include "engelnq/sparse_vec.hpp"

namespace engelnq {

/// Incremental reduced row echelon basis over a field. Rows are inserted one
/// at a time and fully reduced against the current pivots; finalize() back-
/// substitutes so the basis is the (unique) reduced row echelon form of the
/// row space. Pivot coefficients are normalized to 1.
template <class Ring> class Echelon {
public:
  using Vec = SparseVec<Ring>;

  explicit Echelon(const Ring &R) : R_(R) {}

  /// Remainder of v after subtracting pivot rows; zero iff v is in the span.
  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < v.t.size();) {
      auto it = pivot_of_col_.find(v.t[k].first);
      if (it == pivot_of_col_.end()) {
        ++k;
        continue;
      }
      // rows_[it->second] has lead coefficient 1 at this column
      auto c = R_.neg(v.t[k].second);
      v = add_scaled(R_, v, c, rows_[it->second]);
      // the eliminated column disappeared; entries before position k are
      // pivot-free already, so continue from k
    }
    return v;
  }

  /// Inserts a row; returns true if it enlarged the span.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty())
      return false;
    auto lead = v.t.front();
    if (lead.second != R_.one())
      v = scale(R_, v, R_.inv(lead.second));
    pivot_of_col_[v.t.front().first] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(v));
    finalized_ = false;
    return true;
  }

  /// Back-substitutes so every pivot column occurs in exactly one row, and
  /// sorts rows by pivot column.
  void finalize() {
    if (finalized_)
      return;
    std::sort(rows_.begin(), rows_.end(), [](const Vec &a, const Vec &b) {
      return a.t.front().first < b.t.front().first;
    });
    pivot_of_col_.clear();
    for (std::size_t r = 0; r < rows_.size(); ++r)
      pivot_of_col_[rows_[r].t.front().first] =
          static_cast<std::uint32_t>(r);
    for (std::size_t r = rows_.size(); r-- > 0;) {
      Vec &row = rows_[r];
      for (std::size_t k = 1; k < row.t.size();) {
        auto it = pivot_of_col_.find(row.t[k].first);
        if (it == pivot_of_col_.end() || it->second == r) {
          ++k;
          continue;
        }
        auto c = R_.neg(row.t[k].second);
        row = add_scaled(R_, row, c, rows_[it->second]);
      }
    }
    finalized_ = true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec> &rows() const { return rows_; }

  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> cols;
    cols.reserve(rows_.size());
    for (const auto &r : rows_)
      cols.push_back(r.t.front().first);
    std::sort(cols.begin(), cols.end());
    return cols;
  }

  bool has_pivot(std::uint32_t col) const {
    return pivot_of_col_.count(col) != 0;
  }

private:
  Ring R_;
  std::vector<Vec> rows_;
  std::unordered_map<std::uint32_t, std::uint32_t> pivot_of_col_;
  bool finalized_ = false;
};

namespace exactalg {

/// Reduced row echelon form of field-mode rows. Returns the basis rows and
/// the pivot columns (strictly increasing). Mixed modes raise
/// ring_mode_error, integer mode raises unsupported_ring_error.
std::pair<std::vector<SparseRow>, std::vector<std::size_t>>
echelonize(const std::vector<SparseRow> &rows);

} // namespace exactalg

} // namespace engelnq
