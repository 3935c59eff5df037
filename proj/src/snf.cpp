#include "engelnq/snf.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "engelnq/echelon.hpp"
#include "engelnq/rings.hpp"

namespace engelnq {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) %
                                    m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for the 64-bit range
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

namespace {

bool is_prime_mpz(const mpz_class &n) {
  if (n.fits_ulong_p())
    return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

mpz_class pollard_rho(const mpz_class &n) {
  // Brent's cycle variant; n must be odd composite, not a prime power issue
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed5eedul);
  while (true) {
    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long step = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(step, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n)
      return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned> &out) {
  if (n <= 1)
    return;
  if (is_prime_mpz(n)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::map<mpz_class, unsigned> acc;
  if (n < 0)
    n = -n;
  if (n <= 1)
    return {};
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      acc[mpz_class(static_cast<unsigned long>(d))]++;
      n /= static_cast<unsigned long>(d);
    }
  }
  for (std::uint64_t d = 7; d <= 1000000 && n > 1; d += 2) {
    if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0)
      break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      acc[mpz_class(static_cast<unsigned long>(d))]++;
      n /= static_cast<unsigned long>(d);
    }
  }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

std::size_t rank_mod_p(const std::vector<IntRow> &rows, std::uint64_t p) {
  PrimeFieldRing R(p);
  Echelon<PrimeFieldRing> ech(R);
  for (const auto &row : rows) {
    SparseVec<PrimeFieldRing> v;
    v.t.reserve(row.size());
    for (const auto &[col, z] : row) {
      std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), p);
      if (r)
        v.t.emplace_back(col, r);
    }
    ech.insert(std::move(v));
  }
  return ech.rank();
}

namespace {

/// Incremental Hermite-style triangularization preserving the row lattice.
/// Pivot leads are kept positive and rows are reduced mod the pivot leads
/// eagerly; gcds are reached by floor-division steps, which keeps entries
/// near the size of the final (small) diagonal instead of letting Bezout
/// coefficients compound across insertions.
class HermiteBasis {
public:
  void insert(IntRow row) {
    reduce_row(row);
    while (!row.empty()) {
      std::uint32_t c = row.front().first;
      auto it = pivot_.find(c);
      if (it == pivot_.end()) {
        if (sgn(row.front().second) < 0)
          for (auto &[col, v] : row)
            v = -v;
        std::size_t slot = rows_.size();
        pivot_[c] = slot;
        rows_.push_back(std::move(row));
        reduce_row(rows_[slot]);
        return;
      }
      IntRow &piv = rows_[it->second];
      while (!row.empty() && row.front().first == c) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), row.front().second.get_mpz_t(),
                   piv.front().second.get_mpz_t());
        if (q != 0)
          row = add_scaled_int(row, -q, piv);
        if (row.empty() || row.front().first != c)
          break;
        // remainder in (0, pivot): it becomes the new, smaller pivot
        std::swap(row, piv);
        reduce_row(piv);
      }
    }
  }

  /// Reduce tail entries at pivot columns mod the pivot's (positive) lead.
  /// Pivots for those columns have strictly later leads, so the row's own
  /// lead entry is never disturbed.
  void reduce_row(IntRow &row) {
    for (std::size_t k = 1; k < row.size();) {
      auto it = pivot_.find(row[k].first);
      if (it == pivot_.end()) {
        ++k;
        continue;
      }
      const IntRow &piv = rows_[it->second];
      if (&piv == &row) {
        ++k;
        continue;
      }
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), row[k].second.get_mpz_t(),
                 piv.front().second.get_mpz_t());
      if (q == 0) {
        ++k;
        continue;
      }
      row = add_scaled_int(row, -q, piv);
      // position k may now hold a different column; re-examine it
    }
  }

  void hermite_reduce() {
    std::vector<std::uint32_t> cols;
    cols.reserve(pivot_.size());
    for (auto &[c, _] : pivot_)
      cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    for (auto c : cols)
      reduce_row(rows_[pivot_.at(c)]);
  }

  std::vector<IntRow> take_rows() {
    std::vector<IntRow> out;
    out.reserve(pivot_.size());
    std::vector<std::uint32_t> cols;
    for (auto &[c, _] : pivot_)
      cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    for (auto c : cols)
      out.push_back(std::move(rows_[pivot_.at(c)]));
    return out;
  }

  std::size_t rank() const { return pivot_.size(); }

  static IntRow add_scaled_int(const IntRow &a, const mpz_class &c,
                               const IntRow &b) {
    IntRow r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first)
        r.push_back(a[i++]);
      else if (a[i].first > b[j].first) {
        mpz_class v = c * b[j].second;
        if (v != 0)
          r.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        mpz_class v = a[i].second + c * b[j].second;
        if (v != 0)
          r.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i)
      r.push_back(a[i]);
    for (; j < b.size(); ++j) {
      mpz_class v = c * b[j].second;
      if (v != 0)
        r.emplace_back(b[j].first, std::move(v));
    }
    return r;
  }



private:
  std::vector<IntRow> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
};

/// Row Hermite form of a set of sparse rows (lattice-preserving).
std::vector<IntRow> hnf_rows(const std::vector<IntRow> &rows) {
  HermiteBasis hb;
  std::size_t since = 0;
  for (const auto &row : rows) {
    hb.insert(row);
    if (++since == 512) {
      hb.hermite_reduce();
      since = 0;
    }
  }
  hb.hermite_reduce();
  return hb.take_rows();
}

std::vector<IntRow> transpose_rows(const std::vector<IntRow> &rows) {
  std::map<std::uint32_t, IntRow> cols;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto &[c, v] : rows[r])
      cols[c].emplace_back(static_cast<std::uint32_t>(r), v);
  std::vector<IntRow> out;
  out.reserve(cols.size());
  for (auto &[c, col] : cols)
    out.push_back(std::move(col));
  return out;
}

bool is_diagonal(const std::vector<IntRow> &rows) {
  for (const auto &row : rows)
    if (row.size() != 1)
      return false;
  return true;
}

void fix_divisor_chain(std::vector<mpz_class> &d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t()))
          continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
        d[j] = d[i] / g * d[j];
        d[i] = g;
        changed = true;
      }
  }
  std::sort(d.begin(), d.end());
}

} // namespace

exactalg::SNFResult smith_normal_form_int(const std::vector<IntRow> &rows,
                                          std::size_t num_columns) {
  for (const auto &row : rows)
    for (const auto &[col, v] : row)
      if (col >= num_columns)
        throw domain_error("row entry beyond column count");

  std::vector<IntRow> basis = hnf_rows(rows);

  exactalg::SNFResult result;
  result.rank = basis.size();
  if (basis.empty())
    return result;

  // Diagonalize by alternating row and column Hermite reductions; each pass
  // keeps entries reduced mod the pivots, so coefficients stay near the size
  // of the final divisors.
  unsigned guard = 0;
  while (!is_diagonal(basis)) {
    basis = hnf_rows(transpose_rows(basis));
    if (is_diagonal(basis))
      break;
    basis = hnf_rows(transpose_rows(basis));
    if (++guard > 1000)
      throw error("smith normal form did not converge");
  }

  std::vector<mpz_class> divisors;
  divisors.reserve(basis.size());
  for (const auto &row : basis)
    divisors.push_back(abs(row.front().second));
  fix_divisor_chain(divisors);
  result.elementary_divisors = std::move(divisors);
  if (result.elementary_divisors.size() != result.rank)
    throw error("smith normal form: rank/divisor count mismatch");
  return result;
}

namespace exactalg {

void SNFResult::validate() const {
  if (elementary_divisors.size() != rank)
    throw domain_error("SNF divisor list length differs from rank");
  for (std::size_t i = 0; i < elementary_divisors.size(); ++i) {
    if (elementary_divisors[i] < 1)
      throw domain_error("SNF divisor below 1");
    if (i > 0 && !mpz_divisible_p(elementary_divisors[i].get_mpz_t(),
                                  elementary_divisors[i - 1].get_mpz_t()))
      throw domain_error("SNF divisors do not form a divisibility chain");
  }
}

SNFResult smith_normal_form(const std::vector<SparseRow> &rows,
                            std::size_t num_columns) {
  std::vector<IntRow> int_rows;
  int_rows.reserve(rows.size());
  for (const auto &row : rows) {
    row.validate();
    IntRow r;
    r.reserve(row.entries.size());
    for (const auto &[col, s] : row.entries) {
      if (s.mode() != RingMode::Integers)
        throw ring_mode_error("smith_normal_form requires integer rows");
      r.emplace_back(static_cast<std::uint32_t>(col), s.integer_value());
    }
    int_rows.push_back(std::move(r));
  }
  return smith_normal_form_int(int_rows, num_columns);
}

std::vector<mpz_class> prime_support(const SNFResult &s) {
  s.validate();
  std::vector<mpz_class> primes;
  if (s.elementary_divisors.empty())
    return primes;
  // in a divisibility chain the last divisor carries every prime
  mpz_class prod = 1;
  for (const auto &d : s.elementary_divisors)
    prod *= d;
  for (const auto &[p, e] : factor_integer(prod))
    primes.push_back(p);
  return primes;
}

} // namespace exactalg

} // namespace engelnq
