#include "hilbstab/curves.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hs::detail {
extern const std::vector<std::pair<std::string, std::string>> kFixtureFiles;
}

namespace hs {

HyperellipticData wiman_data(unsigned g, unsigned nu) {
  HyperellipticData d;
  d.g = g;
  d.nu = nu;
  d.f.assign(2 * g + 2, 0);
  d.f[0] = -1;
  d.f[2 * g + 1] = 1;
  return d;
}

namespace {

void check(const HyperellipticData& d) {
  if (d.g < 2) throw Error("genus must be at least 2");
  if (d.nu < 2) throw Error("nu must be at least 2");
  if (d.f.size() != 2 * d.g + 2) throw Error("f needs 2g + 2 coefficients (constant term first)");
  if (d.f.back() == 0) throw Error("f must have degree 2g + 1");
  if (d.k() < d.e()) throw Error("this embedding needs nu (g - 1) >= g + 1");
}

struct Coords {
  std::size_t nvars;
  unsigned k;
  std::size_t x(unsigned p) const { return p; }          // x^p, p <= k
  std::size_t y(unsigned p) const { return k + 1 + p; }  // y x^p
};

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::monomial(Monomial::variable(n, i)); }

Polynomial product(std::size_t n, std::size_t i, std::size_t j) {
  return Polynomial::monomial(Monomial::variable(n, i) * Monomial::variable(n, j));
}

// the quadric standing for x^p, 0 <= p <= 2k - 1: 1 * x^p or x^(p-k) * x^k
Polynomial encode_x(const Coords& c, unsigned p) {
  if (p <= c.k) return product(c.nvars, c.x(0), c.x(p));
  return product(c.nvars, c.x(p - c.k), c.x(c.k));
}

// rows (top, bottom) of the scroll matrix, one column per entry
std::vector<std::pair<std::size_t, std::size_t>> scroll_columns(const HyperellipticData& d,
                                                               const Coords& c) {
  std::vector<std::pair<std::size_t, std::size_t>> cols;
  const unsigned s = d.k() - d.e();
  for (unsigned j = s; j >= 1; --j) cols.push_back({c.y(j), c.y(j - 1)});
  for (unsigned j = d.k(); j >= 1; --j) cols.push_back({c.x(j), c.x(j - 1)});
  return cols;
}

}  // namespace

std::vector<std::string> pluricanonical_basis(const HyperellipticData& d) {
  check(d);
  std::vector<std::string> out;
  auto xp = [](unsigned p) {
    return p == 0 ? std::string() : p == 1 ? std::string("x") : "x^" + std::to_string(p);
  };
  for (unsigned p = 0; p <= d.k(); ++p) out.push_back(p == 0 ? "1" : xp(p));
  for (unsigned p = 0; p <= d.k() - d.e(); ++p) out.push_back("y" + xp(p));
  return out;
}

Ideal scroll_ideal(const HyperellipticData& d) {
  check(d);
  const std::size_t n = d.k() + 1 + (d.k() - d.e() + 1);
  Coords c{n, d.k()};
  Ring R = Ring::letters(n);
  std::vector<Polynomial> gens;
  if (d.k() == d.e()) {
    // a single y: the x coordinates form a rational normal curve, cut out by
    // the catalecticant minors taken in lex order of column pairs
    for (unsigned i = 0; i < d.k(); ++i)
      for (unsigned j = i + 1; j < d.k(); ++j)
        gens.push_back(product(n, c.x(i), c.x(j + 1)) - product(n, c.x(j), c.x(i + 1)));
    return Ideal(R, gens);
  }
  auto cols = scroll_columns(d, c);
  for (std::size_t j = 1; j < cols.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      gens.push_back(product(n, cols[i].first, cols[j].second) -
                     product(n, cols[j].first, cols[i].second));
  return Ideal(R, gens);
}

Ideal hyperelliptic_pluricanonical_ideal(const HyperellipticData& d) {
  Ideal I = scroll_ideal(d);
  const std::size_t n = I.ring.size();
  Coords c{n, d.k()};
  if (d.k() == d.e()) {
    // y^2 = x^(2g+2) f(1/x) in the chart where infinity is not a branch point
    Polynomial q = product(n, c.y(0), c.y(0));
    const unsigned top = 2 * d.g + 2;
    for (unsigned p = 0; p < d.f.size(); ++p)
      if (d.f[p] != 0) q -= encode_x(c, top - p) * d.f[p];
    I.generators.push_back(q);
    return I;
  }
  for (unsigned i = 0; i <= 2 * (d.k() - d.e()); ++i) {
    Polynomial q = product(n, c.y(i / 2), c.y((i + 1) / 2));
    for (unsigned p = 0; p < d.f.size(); ++p)
      if (d.f[p] != 0) q -= encode_x(c, p + i) * d.f[p];
    I.generators.push_back(q);
  }
  return I;
}

Ideal wiman_ideal(unsigned g, unsigned nu) {
  return hyperelliptic_pluricanonical_ideal(wiman_data(g, nu));
}

Ideal extend_to_ambient(const Ideal& I, const Ring& ambient) {
  const std::size_t n = ambient.size();
  std::vector<std::size_t> where(I.ring.size());
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < I.ring.size(); ++i) {
    int k = ambient.index_of(I.ring.name(i));
    if (k < 0) throw Error("variable " + I.ring.name(i) + " is not in the ambient ring");
    where[i] = std::size_t(k);
    used[std::size_t(k)] = true;
  }
  Ideal out;
  out.ring = ambient;
  for (const auto& p : I.generators) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < t.m.size(); ++i) m.set(where[i], t.m[i]);
      ts.push_back({m, t.c});
    }
    out.generators.emplace_back(n, std::move(ts));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) out.generators.push_back(var(n, k));
  return out;
}

// ---------------------------------------------------------------- fixtures

namespace {

const std::vector<std::string>& stored_names() {
  static const std::vector<std::string> names = {
      "twisted_cubic",   "two_points_p2",   "cuspidal_cubic",
      "ribbon_g4",       "wiman_2",         "wiman_3",
      "wiman_4",         "wiman_5",         "wiman_6",
      "wiman_7",         "wiman_8",         "elliptic_bridge",
      "elliptic_bridge_diagonalized",       "g2_weierstrass_tail",
      "g2_general_tail", "wiman_3_p7",      "g2_general_p4"};
  return names;
}

const std::string* stored_file(std::string_view name) {
  for (const auto& [k, v] : detail::kFixtureFiles)
    if (k == name) return &v;
  return nullptr;
}

std::optional<unsigned> generated_wiman(std::string_view name) {
  if (name.rfind("wiman_", 0) != 0 || name.size() != 7) return std::nullopt;
  unsigned g = unsigned(name[6] - '0');
  if (g < 5 || g > 8) return std::nullopt;
  return g;
}

std::optional<Ring> vars_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find_first_not_of(" \t");
    if (a != std::string::npos && line.compare(a, 5, "vars:") == 0)
      return parse_ideal(line + "\n").ring;
  }
  return std::nullopt;
}

std::vector<std::string> intersect_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find_first_not_of(" \t");
    if (a != std::string::npos && line.compare(a, 10, "intersect:") == 0)
      out.push_back(line.substr(a + 10));
  }
  return out;
}

}  // namespace

std::vector<std::string> fixture_names() { return stored_names(); }

std::string fixture_text(std::string_view name) {
  if (auto g = generated_wiman(name)) return to_string(wiman_ideal(*g)) + "\n";
  const std::string* s = stored_file(name);
  if (!s || name == "wiman_4_whittled") throw Error("unknown fixture: " + std::string(name));
  return *s;
}

std::vector<Ideal> fixture_components(std::string_view name) {
  std::vector<Ideal> out;
  if (generated_wiman(name)) return out;
  const std::string text = fixture_text(name);
  auto R = vars_line(text);
  for (const auto& line : intersect_lines(text)) out.push_back(parse_ideal(line, R));
  return out;
}

Ideal fixture(std::string_view name) {
  if (auto g = generated_wiman(name)) return wiman_ideal(*g);
  auto parts = fixture_components(name);
  if (parts.empty()) return parse_ideal(fixture_text(name));
  static std::mutex lock;
  static std::map<std::string, Ideal, std::less<>> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  Ideal I = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) I = intersect_ideals(I, parts[k]);
  cache.emplace(std::string(name), I);
  return I;
}

std::vector<MonomialIdeal> whittled_initial_ideals() {
  const std::string* text = stored_file("wiman_4_whittled");
  if (!text) throw Error("whittled list missing");
  Ring R = *vars_line(*text);
  std::vector<MonomialIdeal> out;
  std::string body;
  {
    std::istringstream in(*text);
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find("vars:") == std::string::npos) body += line + "\n";
    }
  }
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '{') {
      if (++depth == 2) cur.clear();
      continue;
    }
    if (ch == '}') {
      if (depth-- == 2) {
        std::vector<Monomial> gens;
        for (const auto& p : parse_ideal(cur, R).generators) {
          if (p.size() != 1) throw Error("whittled list holds a non-monomial");
          gens.push_back(p.terms().front().m);
        }
        out.emplace_back(R, std::move(gens));
      }
      continue;
    }
    if (depth == 2) cur += ch;
  }
  return out;
}

}  // namespace hs
