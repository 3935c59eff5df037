#include "engelnq/wreath3.hpp"

#include <algorithm>

#include "engelnq/parallel.hpp"

namespace engelnq::wreath3 {

namespace {

inline unsigned char mod3(int v) {
  int r = v % 3;
  if (r < 0)
    r += 3;
  return static_cast<unsigned char>(r);
}

void add_monomial(Element &e, const Monomial &m, int coeff) {
  unsigned char c = mod3(coeff);
  if (c == 0)
    return;
  auto it = e.c.find(m);
  if (it == e.c.end()) {
    e.c.emplace(m, c);
    return;
  }
  it->second = mod3(it->second + c);
  if (it->second == 0)
    e.c.erase(it);
}

void add_afactor(Element &e, const Factor &f, int coeff) {
  unsigned char c = mod3(coeff);
  if (c == 0)
    return;
  auto it = e.a.find(f);
  if (it == e.a.end()) {
    e.a.emplace(f, c);
    return;
  }
  it->second = mod3(it->second + c);
  if (it->second == 0)
    e.a.erase(it);
}

} // namespace

std::string Element::str() const {
  if (is_zero())
    return "0";
  std::string s;
  auto append = [&s](unsigned char coeff, const std::string &term) {
    if (!s.empty())
      s += " + ";
    if (coeff != 1)
      s += std::to_string(coeff) + "*";
    s += term;
  };
  for (const auto &[f, coeff] : a)
    append(coeff, f.str());
  for (const auto &[m, coeff] : c)
    append(coeff, m.str());
  return s;
}

Element b_element() {
  Element e;
  e.c.emplace(Monomial{}, 1);
  return e;
}

Element monomial_element(Monomial m) {
  Element e;
  e.c.emplace(std::move(m), 1);
  return e;
}

Element a_element(Factor f) {
  if (f.index < 1 || (f.kind == Factor::Kind::Bracket && f.index < 2))
    throw domain_error("invalid basis factor");
  Element e;
  e.a.emplace(f, 1);
  return e;
}

Element add(const Element &u, const Element &v) {
  Element e = u;
  for (const auto &[m, coeff] : v.c)
    add_monomial(e, m, coeff);
  for (const auto &[f, coeff] : v.a)
    add_afactor(e, f, coeff);
  return e;
}

Element negate(const Element &u) {
  Element e;
  for (const auto &[m, coeff] : u.c)
    e.c.emplace(m, mod3(-static_cast<int>(coeff)));
  for (const auto &[f, coeff] : u.a)
    e.a.emplace(f, mod3(-static_cast<int>(coeff)));
  return e;
}

Element normal_form(const std::vector<Factor> &raw) {
  for (const auto &f : raw) {
    if (f.index < 1)
      throw domain_error("factor index must be at least 1");
  }

  Element out;
  struct Term {
    int coeff;
    std::vector<Factor> seq;
  };
  std::vector<Term> work{{1, raw}};

  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();

    // [a_1, a_1] = 0, so a bracket factor with index 1 kills the term
    bool dead = false;
    for (const auto &f : t.seq)
      if (f.kind == Factor::Kind::Bracket && f.index == 1) {
        dead = true;
        break;
      }
    if (dead)
      continue;

    // a repeated index n > 1 anywhere in the sequence lands in the ideal J
    {
      std::map<unsigned, unsigned> count;
      for (const auto &f : t.seq)
        if (f.index > 1 && ++count[f.index] >= 2) {
          dead = true;
          break;
        }
    }
    if (dead)
      continue;

    // leftmost adjacent inversion in (plain-before-bracket, index) order
    std::size_t inv = t.seq.size();
    for (std::size_t j = 0; j + 1 < t.seq.size(); ++j) {
      if (t.seq[j + 1] < t.seq[j]) {
        inv = j;
        break;
      }
    }

    if (inv == t.seq.size()) {
      Monomial m;
      for (const auto &f : t.seq) {
        if (f.kind == Factor::Kind::Plain)
          m.plain.push_back(f.index);
        else
          m.bracket.push_back(f.index);
      }
      // three or more leading a_1's span the ideal I
      if (std::count(m.plain.begin(), m.plain.end(), 1u) >= 3)
        continue;
      add_monomial(out, m, t.coeff);
      continue;
    }

    Factor u = t.seq[inv], v = t.seq[inv + 1];
    // [c, ..., u, v, ...] = [c, ..., v, u, ...] + [c, ..., [u,v], ...]
    Term swapped{t.coeff, t.seq};
    std::swap(swapped.seq[inv], swapped.seq[inv + 1]);
    work.push_back(std::move(swapped));

    // [u, v] in the class-two acting algebra: nonzero only for
    // [a_i, a_1] = the bracket generator, i >= 2
    if (u.kind == Factor::Kind::Plain && v.kind == Factor::Kind::Plain &&
        v.index == 1 && u.index >= 2) {
      Term corr{t.coeff, {}};
      corr.seq.reserve(t.seq.size() - 1);
      corr.seq.insert(corr.seq.end(), t.seq.begin(),
                      t.seq.begin() + static_cast<long>(inv));
      corr.seq.push_back(Factor::bracket(u.index));
      corr.seq.insert(corr.seq.end(),
                      t.seq.begin() + static_cast<long>(inv) + 2, t.seq.end());
      work.push_back(std::move(corr));
    }
  }
  return out;
}

Element bracket(const Element &u, const Element &v) {
  Element out;

  // action of the top algebra on the abelian ideal: append a factor
  for (const auto &[m, cm] : u.c)
    for (const auto &[f, cf] : v.a) {
      auto seq = m.factors();
      seq.push_back(f);
      Element nf = normal_form(seq);
      for (const auto &[m2, c2] : nf.c)
        add_monomial(out, m2, static_cast<int>(cm) * cf * c2);
    }
  for (const auto &[m, cm] : v.c)
    for (const auto &[f, cf] : u.a) {
      auto seq = m.factors();
      seq.push_back(f);
      Element nf = normal_form(seq);
      for (const auto &[m2, c2] : nf.c)
        add_monomial(out, m2, -static_cast<int>(cm) * cf * c2);
    }

  // inside the class-two acting algebra: [a_i, a_1] = bracket generator
  auto coeff_of = [](const Element &e, const Factor &f) -> int {
    auto it = e.a.find(f);
    return it == e.a.end() ? 0 : it->second;
  };
  int u1 = coeff_of(u, Factor::plain(1));
  int v1 = coeff_of(v, Factor::plain(1));
  std::map<unsigned, int> net;
  for (const auto &[f, cf] : u.a)
    if (f.kind == Factor::Kind::Plain && f.index >= 2)
      net[f.index] += static_cast<int>(cf) * v1;
  for (const auto &[f, cf] : v.a)
    if (f.kind == Factor::Kind::Plain && f.index >= 2)
      net[f.index] -= static_cast<int>(cf) * u1;
  for (const auto &[i, coeff] : net)
    add_afactor(out, Factor::bracket(i), coeff);

  return out;
}

std::vector<Monomial> monomial_basis(unsigned max_index, unsigned weight_cap) {
  std::vector<Monomial> out;
  // assignment per index n >= 2: absent, plain, or bracket; plus 0..2 ones
  std::vector<unsigned> state(max_index + 1, 0);
  auto rec = [&](auto &&self, unsigned n) -> void {
    if (n > max_index) {
      for (unsigned ones = 0; ones <= 2; ++ones) {
        Monomial m;
        for (unsigned o = 0; o < ones; ++o)
          m.plain.push_back(1);
        for (unsigned i = 2; i <= max_index; ++i) {
          if (state[i] == 1)
            m.plain.push_back(i);
          else if (state[i] == 2)
            m.bracket.push_back(i);
        }
        if (m.weight() <= weight_cap)
          out.push_back(std::move(m));
      }
      return;
    }
    for (unsigned s = 0; s <= 2; ++s) {
      state[n] = s;
      self(self, n + 1);
    }
    state[n] = 0;
  };
  rec(rec, 2);
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport verify_engel_cases(unsigned max_index, unsigned weight_cap,
                                unsigned threads) {
  if (max_index < 3)
    throw domain_error("verification needs max_index >= 3");

  std::vector<Factor> gens;
  for (unsigned i = 1; i <= max_index; ++i)
    gens.push_back(Factor::plain(i));
  for (unsigned r = 2; r <= max_index; ++r)
    gens.push_back(Factor::bracket(r));

  auto monomials = monomial_basis(max_index, weight_cap);

  VerifyReport rep;
  rep.monomials = monomials.size();

  struct Local {
    unsigned long c1 = 0, c2 = 0, c3 = 0;
    std::string counterexample;
  };
  std::vector<Local> locals(monomials.size());

  if (!threads)
    threads = default_threads();
  parallel_jobs(
      monomials.size(), threads, [] { return 0; },
      [&](int &, std::size_t mi) {
        Local &loc = locals[mi];
        Element c = monomial_element(monomials[mi]);
        auto record = [&](const Element &e, const std::string &what) {
          if (!e.is_zero() && loc.counterexample.empty())
            loc.counterexample =
                what + " on c = " + monomials[mi].str() + " gives " + e.str();
        };
        for (std::size_t xi = 0; xi < gens.size(); ++xi) {
          Element x = a_element(gens[xi]);
          Element cx = bracket(c, x);
          Element cxx = bracket(cx, x);
          record(bracket(cxx, x), "[c,x,x,x] with x=" + gens[xi].str());
          ++loc.c1;
          for (std::size_t yi = 0; yi < gens.size(); ++yi) {
            if (yi == xi)
              continue;
            Element y = a_element(gens[yi]);
            Element cxy = bracket(cx, y);
            Element cy = bracket(c, y);
            Element sum = add(bracket(cxx, y),
                              add(bracket(cxy, x), bracket(bracket(cy, x), x)));
            record(sum, "[c,x,x,y]+[c,x,y,x]+[c,y,x,x] with x=" +
                            gens[xi].str() + " y=" + gens[yi].str());
            ++loc.c2;
            for (std::size_t zi = yi + 1; zi < gens.size(); ++zi) {
              if (zi == xi || xi > yi)
                continue; // take x < y < z once
              Element z = a_element(gens[zi]);
              Element s = bracket(cxy, z);
              s = add(s, bracket(bracket(cx, z), y));
              s = add(s, bracket(bracket(cy, x), z));
              s = add(s, bracket(bracket(cy, z), x));
              Element cz = bracket(c, z);
              s = add(s, bracket(bracket(cz, x), y));
              s = add(s, bracket(bracket(cz, y), x));
              record(s, "six-term sum with x=" + gens[xi].str() +
                            " y=" + gens[yi].str() + " z=" + gens[zi].str());
              ++loc.c3;
            }
          }
        }
      });

  for (const auto &loc : locals) {
    rep.case1 += loc.c1;
    rep.case2 += loc.c2;
    rep.case3 += loc.c3;
    if (!loc.counterexample.empty() && rep.ok) {
      rep.ok = false;
      rep.counterexample = loc.counterexample;
    }
  }
  return rep;
}

Element id_a1_witness(unsigned k, unsigned max_index) {
  if (k < 1)
    throw domain_error("witness depth must be at least 1");
  if (max_index < k + 1)
    throw domain_error("witness needs max_index >= k + 1");
  std::vector<Factor> seq;
  for (unsigned j = 2; j <= k + 1; ++j)
    seq.push_back(Factor::bracket(j));
  Element e = normal_form(seq);
  Monomial expect;
  for (unsigned j = 2; j <= k + 1; ++j)
    expect.bracket.push_back(j);
  if (e.c.size() != 1 || e.c.begin()->first != expect ||
      e.c.begin()->second != 1)
    throw error("witness did not normalize to the expected monomial");
  return e;
}

} // namespace engelnq::wreath3
