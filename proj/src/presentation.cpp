#include "engelnq/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "engelnq/rings.hpp"

namespace engelnq::nqcore {

const char *engel_mode_name(EngelMode mode) {
  switch (mode) {
  case EngelMode::None:
    return "none";
  case EngelMode::Direct:
    return "direct";
  case EngelMode::Multilinear:
    return "multilinear";
  case EngelMode::MultilinearPlusPower:
    return "multilinear+power";
  }
  return "?";
}

unsigned Presentation::generator_index(const std::string &name) const {
  for (unsigned i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == name)
      return i;
  throw domain_error("unknown generator: " + name);
}

void Presentation::validate() const {
  if (gen_names.empty())
    throw domain_error("presentation needs at least one generator");
  if (trunc.max_class < 1)
    throw domain_error("max class must be at least 1");
  if (trunc.cap_x < 1)
    throw domain_error("cap on the distinguished generator must be at least 1");
  if (gen_names.size() > 1 && trunc.cap_a < 1)
    throw domain_error("cap on commuting generators must be at least 1");
  if (ring == RingSpec::PrimeField && !is_prime_u64(p))
    throw domain_error("coefficient field characteristic must be prime");
  for (auto [i, j] : commuting_pairs) {
    if (i >= gen_names.size() || j >= gen_names.size() || i == j)
      throw domain_error("commuting pair references an unknown generator");
  }
  for (const auto &w : left_normed_zero) {
    if (w.size() < 2)
      throw domain_error("relation word needs at least two factors");
    for (auto g : w)
      if (g >= gen_names.size())
        throw domain_error("relation references an unknown generator");
  }
  if (engel.mode != EngelMode::None && engel.degree != 5)
    throw domain_error("only the 5-Engel constraint is supported");
}

std::string Presentation::canonical_text() const {
  std::ostringstream os;
  if (ring == RingSpec::Rationals)
    os << "ring Q\n";
  else
    os << "ring GF " << p << "\n";
  os << "gens";
  for (const auto &n : gen_names)
    os << ' ' << n;
  os << "\n";
  auto pairs = commuting_pairs;
  for (auto &pr : pairs)
    if (pr.first > pr.second)
      std::swap(pr.first, pr.second);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [i, j] : pairs)
    os << "commute " << gen_names[i] << ' ' << gen_names[j] << "\n";
  if (trunc.cap_x != TruncationSpec::kUnbounded)
    os << "cap x " << trunc.cap_x << "\n";
  if (trunc.cap_a != TruncationSpec::kUnbounded)
    os << "cap a " << trunc.cap_a << "\n";
  os << "maxclass " << trunc.max_class << "\n";
  if (engel.mode != EngelMode::None)
    os << "engel " << engel.degree << ' ' << engel_mode_name(engel.mode)
       << "\n";
  return os.str();
}

namespace {

struct Tokenizer {
  std::vector<std::pair<std::size_t, std::string>> tokens; // (column, token)
  std::size_t line;

  Tokenizer(const std::string &text, std::size_t line_no) : line(line_no) {
    std::size_t col = 1;
    std::string cur;
    std::size_t cur_col = 1;
    for (char c : text) {
      if (c == '#')
        break;
      if (c == ' ' || c == '\t') {
        if (!cur.empty()) {
          tokens.emplace_back(cur_col, cur);
          cur.clear();
        }
      } else {
        if (cur.empty())
          cur_col = col;
        cur += c;
      }
      ++col;
    }
    if (!cur.empty())
      tokens.emplace_back(cur_col, cur);
  }

  [[noreturn]] void fail(std::size_t idx, const std::string &msg) const {
    std::size_t col =
        idx < tokens.size() ? tokens[idx].first
                            : (tokens.empty() ? 1 : tokens.back().first + 1);
    throw parse_error(line, col, msg);
  }

  const std::string &at(std::size_t idx, const char *what) const {
    if (idx >= tokens.size())
      fail(idx, std::string("expected ") + what);
    return tokens[idx].second;
  }

  unsigned number(std::size_t idx, const char *what) const {
    const std::string &t = at(idx, what);
    unsigned v = 0;
    for (char c : t) {
      if (c < '0' || c > '9')
        fail(idx, std::string("expected a number for ") + what);
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  }
};

} // namespace

Presentation Presentation::parse(const std::string &text) {
  Presentation pres;
  pres.trunc.max_class = 0;
  bool commute_all = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    Tokenizer tk(raw, line_no);
    if (tk.tokens.empty())
      continue;
    const std::string &kw = tk.tokens[0].second;
    if (kw == "ring") {
      const std::string &r = tk.at(1, "ring name (Q or GF)");
      if (r == "Q") {
        pres.ring = RingSpec::Rationals;
      } else if (r == "GF") {
        pres.ring = RingSpec::PrimeField;
        pres.p = tk.number(2, "prime");
      } else {
        tk.fail(1, "unknown ring (expected Q or GF <p>)");
      }
    } else if (kw == "gens") {
      if (tk.tokens.size() < 2)
        tk.fail(1, "expected at least one generator name");
      for (std::size_t i = 1; i < tk.tokens.size(); ++i)
        pres.gen_names.push_back(tk.tokens[i].second);
    } else if (kw == "commute") {
      const std::string &a = tk.at(1, "generator name");
      const std::string &b = tk.at(2, "generator name");
      try {
        pres.commuting_pairs.emplace_back(pres.generator_index(a),
                                          pres.generator_index(b));
      } catch (const domain_error &e) {
        tk.fail(1, e.what());
      }
    } else if (kw == "commute-all-a") {
      commute_all = true;
    } else if (kw == "cap") {
      const std::string &which = tk.at(1, "cap target (x or a)");
      unsigned v = tk.number(2, "cap value");
      if (which == "x")
        pres.trunc.cap_x = v;
      else if (which == "a")
        pres.trunc.cap_a = v;
      else
        tk.fail(1, "unknown cap target (expected x or a)");
    } else if (kw == "maxclass") {
      pres.trunc.max_class = tk.number(1, "max class");
    } else if (kw == "engel") {
      pres.engel.degree = tk.number(1, "engel degree");
      const std::string &m = tk.at(2, "engel mode");
      if (m == "direct")
        pres.engel.mode = EngelMode::Direct;
      else if (m == "multilinear")
        pres.engel.mode = EngelMode::Multilinear;
      else if (m == "multilinear+power")
        pres.engel.mode = EngelMode::MultilinearPlusPower;
      else
        tk.fail(2, "unknown engel mode");
    } else {
      tk.fail(0, "unknown directive '" + kw + "'");
    }
  }
  if (pres.gen_names.empty())
    throw parse_error(line_no + 1, 1, "no generators declared");
  if (pres.trunc.max_class == 0)
    throw parse_error(line_no + 1, 1, "no maxclass declared");
  if (commute_all) {
    for (unsigned i = 1; i < pres.gen_names.size(); ++i)
      for (unsigned j = i + 1; j < pres.gen_names.size(); ++j)
        pres.commuting_pairs.emplace_back(i, j);
  }
  pres.validate();
  return pres;
}

Presentation Presentation::rational_case(const MultiDegree &target) {
  if (target.size() < 1 || target[0] < 1)
    throw domain_error("case multidegree must have positive degree in x");
  for (std::size_t i = 1; i < target.size(); ++i)
    if (target[i] != 1)
      throw domain_error(
          "case multidegree must be 1 in every commuting generator");
  Presentation pres;
  pres.ring = RingSpec::Rationals;
  pres.gen_names.push_back("x");
  for (std::size_t i = 1; i < target.size(); ++i)
    pres.gen_names.push_back("a" + std::to_string(i));
  for (unsigned i = 1; i < target.size(); ++i)
    for (unsigned j = i + 1; j < target.size(); ++j)
      pres.commuting_pairs.emplace_back(i, j);
  pres.trunc.cap_x = target[0];
  pres.trunc.cap_a = 1;
  pres.trunc.max_class = target.weight();
  pres.validate();
  return pres;
}

Presentation Presentation::gfp_engel_case(std::uint64_t p, unsigned m,
                                          unsigned cap_x, unsigned max_class) {
  Presentation pres;
  pres.ring = RingSpec::PrimeField;
  pres.p = p;
  pres.gen_names.push_back("x");
  for (unsigned i = 1; i <= m; ++i)
    pres.gen_names.push_back("a" + std::to_string(i));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j)
      pres.commuting_pairs.emplace_back(i, j);
  pres.trunc.cap_x = cap_x;
  pres.trunc.cap_a = 1;
  pres.trunc.max_class = max_class;
  pres.engel.degree = 5;
  pres.engel.mode =
      p == 5 ? EngelMode::MultilinearPlusPower : EngelMode::Direct;
  pres.validate();
  return pres;
}

} // namespace engelnq::nqcore
