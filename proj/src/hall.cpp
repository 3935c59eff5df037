#include "engelnq/hall.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "engelnq/errors.hpp"

namespace engelnq::freelie {

HallWord HallWord::generator(unsigned g, MultiDegree md) {
  HallWord w;
  w.gen_ = static_cast<int>(g);
  w.weight_ = md.weight();
  w.md_ = std::move(md);
  return w;
}

HallWord HallWord::pair(HallWord left, HallWord right) {
  HallWord w;
  w.md_ = left.multidegree() + right.multidegree();
  w.weight_ = left.weight() + right.weight();
  w.l_ = std::make_shared<HallWord>(std::move(left));
  w.r_ = std::make_shared<HallWord>(std::move(right));
  return w;
}

unsigned HallWord::generator_index() const {
  if (!is_generator())
    throw domain_error("hall word is not a generator");
  return static_cast<unsigned>(gen_);
}

const HallWord &HallWord::left() const {
  if (is_generator())
    throw domain_error("generator hall word has no factors");
  return *l_;
}

const HallWord &HallWord::right() const {
  if (is_generator())
    throw domain_error("generator hall word has no factors");
  return *r_;
}

std::vector<unsigned> HallWord::letters() const {
  if (is_generator())
    return {static_cast<unsigned>(gen_)};
  auto l = l_->letters();
  auto r = r_->letters();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::string
HallWord::str(const std::vector<std::string> *names) const {
  if (is_generator()) {
    if (names)
      return (*names)[static_cast<std::size_t>(gen_)];
    return "g" + std::to_string(gen_);
  }
  return "[" + l_->str(names) + "," + r_->str(names) + "]";
}

namespace {

HallWord bracket_lyndon(const std::vector<unsigned> &w,
                        const std::vector<MultiDegree> &gen_mds) {
  if (w.size() == 1)
    return HallWord::generator(w[0], gen_mds[w[0]]);
  // standard factorization: right factor = lexicographically smallest
  // proper suffix
  std::size_t best = 1;
  for (std::size_t s = 2; s < w.size(); ++s) {
    if (std::lexicographical_compare(w.begin() + static_cast<long>(s), w.end(),
                                     w.begin() + static_cast<long>(best),
                                     w.end()))
      best = s;
  }
  std::vector<unsigned> u(w.begin(), w.begin() + static_cast<long>(best));
  std::vector<unsigned> v(w.begin() + static_cast<long>(best), w.end());
  return HallWord::pair(bracket_lyndon(u, gen_mds), bracket_lyndon(v, gen_mds));
}

} // namespace

std::vector<HallWord>
hall_basis(std::size_t num_generators,
           const std::vector<MultiDegree> &generator_mds,
           const TruncationSpec &trunc) {
  if (num_generators == 0)
    return {};
  if (generator_mds.size() != num_generators)
    throw domain_error("generator multidegree count mismatch");
  unsigned min_weight = TruncationSpec::kUnbounded;
  bool all_have_x = true;
  for (const auto &md : generator_mds) {
    if (md.weight() == 0)
      throw domain_error("generator of weight zero");
    if (!trunc.admits(md))
      throw domain_error("generator multidegree violates truncation");
    min_weight = std::min(min_weight, md.weight());
    if (md.size() == 0 || md[0] == 0)
      all_have_x = false;
  }

  std::size_t max_len = trunc.max_class / min_weight;
  if (all_have_x && trunc.cap_x != TruncationSpec::kUnbounded)
    max_len = std::min<std::size_t>(max_len, trunc.cap_x);
  if (max_len == 0)
    return {};

  std::vector<HallWord> out;
  const unsigned q = static_cast<unsigned>(num_generators);

  // Duval's iteration: all Lyndon words of length <= max_len in lex order.
  std::vector<unsigned> w{0};
  while (true) {
    MultiDegree md(generator_mds[0].size());
    unsigned weight = 0;
    bool ok = true;
    for (unsigned g : w) {
      md += generator_mds[g];
      weight += generator_mds[g].weight();
      if (weight > trunc.max_class) {
        ok = false;
        break;
      }
    }
    if (ok && trunc.admits(md))
      out.push_back(bracket_lyndon(w, generator_mds));

    // next Lyndon word
    std::vector<unsigned> t;
    t.reserve(max_len);
    for (std::size_t i = 0; i < max_len; ++i)
      t.push_back(w[i % w.size()]);
    while (!t.empty() && t.back() == q - 1)
      t.pop_back();
    if (t.empty())
      break;
    ++t.back();
    w = std::move(t);
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const HallWord &a, const HallWord &b) {
                     if (a.weight() != b.weight())
                       return a.weight() < b.weight();
                     return a.letters() < b.letters();
                   });
  return out;
}

unsigned long witt_dimension(unsigned num_generators, unsigned degree) {
  if (degree == 0)
    throw domain_error("witt_dimension: degree must be positive");
  if (num_generators == 0)
    throw domain_error("witt_dimension: need at least one generator");
  mpz_class total = 0;
  for (unsigned d = 1; d <= degree; ++d) {
    if (degree % d != 0)
      continue;
    // Moebius function of d
    int mu = 1;
    unsigned m = d;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu == 0)
      continue;
    if (m > 1)
      mu = -mu;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), num_generators, degree / d);
    total += mu * term;
  }
  mpz_class dim = total / degree;
  return dim.get_ui();
}

WreathBoundResult wreath_basis_bound(unsigned num_commuting, unsigned cap_x) {
  const unsigned m = num_commuting;
  std::vector<std::vector<unsigned>> subsets;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i))
        s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<unsigned> &a, const std::vector<unsigned> &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });

  std::vector<MultiDegree> gen_mds;
  gen_mds.reserve(subsets.size());
  for (const auto &s : subsets) {
    MultiDegree md(m + 1);
    md.set(0, 1);
    for (unsigned i : s)
      md.set(i, 1);
    gen_mds.push_back(std::move(md));
  }

  TruncationSpec trunc;
  trunc.cap_x = cap_x;
  trunc.cap_a = 1;
  trunc.max_class = cap_x + m;

  auto words = hall_basis(subsets.size(), gen_mds, trunc);

  WreathBoundResult res;
  for (unsigned i = 1; i <= m; ++i) {
    MultiDegree md = MultiDegree::unit(m + 1, i);
    res.by_multidegree[md] += 1;
    res.by_weight[1] += 1;
  }
  for (const auto &w : words) {
    res.by_multidegree[w.multidegree()] += 1;
    res.by_weight[w.weight()] += 1;
  }
  res.total = m + words.size();
  return res;
}

} // namespace engelnq::freelie
