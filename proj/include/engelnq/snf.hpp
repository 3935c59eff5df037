#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "engelnq/scalar.hpp"

namespace engelnq {

/// Integer sparse row: (column, nonzero value), columns strictly increasing.
using IntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

namespace exactalg {

/// Rank and elementary divisor chain of an integer matrix.
struct SNFResult {
  std::size_t rank = 0;
  std::vector<mpz_class> elementary_divisors; // d_1 | d_2 | ... | d_rank

  void validate() const;
};

SNFResult smith_normal_form(const std::vector<SparseRow> &rows,
                            std::size_t num_columns);

/// Set of primes dividing some elementary divisor, ascending.
std::vector<mpz_class> prime_support(const SNFResult &s);

} // namespace exactalg

/// Internal entry points working directly on integer rows.
exactalg::SNFResult smith_normal_form_int(const std::vector<IntRow> &rows,
                                          std::size_t num_columns);

/// Rank of the matrix reduced mod p (a lower bound for the rational rank,
/// equal to it when p avoids the elementary divisors).
std::size_t rank_mod_p(const std::vector<IntRow> &rows, std::uint64_t p);

/// Full factorization: trial division to 10^6, then a primality test and
/// Pollard rho on what remains. Returns (prime, exponent) pairs ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

} // namespace engelnq
