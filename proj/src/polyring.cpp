#include "hilbstab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hs {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

Ring Ring::letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, char('a' + i)) : "x" + std::to_string(i));
  return Ring(std::move(names));
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return int(i);
  return -1;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exp power) {
  Monomial m(nvars);
  m.e_[i] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exp x) { return x == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw Error("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > std::numeric_limits<Exp>::max() - e_[i]) throw Error("exponent overflow");
    r.e_[i] += o.e_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw Error("monomial division is not exact");
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : e_) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- orders

Tiebreak parse_tiebreak(std::string_view s) {
  if (s == "grevlex") return Tiebreak::grevlex;
  if (s == "lex") return Tiebreak::lex;
  throw Error("unknown tiebreak '" + std::string(s) + "' (grevlex|lex)");
}

const char* tiebreak_name(Tiebreak t) { return t == Tiebreak::lex ? "lex" : "grevlex"; }

TermOrder::TermOrder(Weight w, Tiebreak tb) : tb_(tb) {
  if (!w.empty()) rows_.push_back(std::move(w));
}

TermOrder::TermOrder(std::vector<Weight> rows, Tiebreak tb) : rows_(std::move(rows)), tb_(tb) {}

static __int128 dot128(const Weight& w, const Monomial& m) {
  if (w.size() != m.size()) throw Error("weight length does not match number of variables");
  __int128 s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += (__int128)w[i] * m[i];
  return s;
}

int tiebreak_compare(Tiebreak tb, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  if (tb == Tiebreak::grevlex) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

OrderCmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& r : rows_) {
    __int128 wa = dot128(r, a), wb = dot128(r, b);
    if (wa != wb) return {wa > wb ? 1 : -1, false};
  }
  int s = tiebreak_compare(tb_, a, b);
  return {s, s != 0};
}

bool TermOrder::weight_tie(const Monomial& a, const Monomial& b) const {
  for (const auto& r : rows_)
    if (dot128(r, a) != dot128(r, b)) return false;
  return true;
}

std::int64_t monomial_weight(const Weight& w, const Monomial& m) {
  __int128 s = dot128(w, m);
  if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
    throw Error("monomial weight overflow");
  return std::int64_t(s);
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : n_(nvars) {
  for (const auto& t : terms)
    if (t.m.size() != nvars) throw Error("term arity mismatch");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
  for (auto& t : terms) {
    if (!t_.empty() && t_.back().m == t.m) {
      t_.back().c += t.c;
      if (t_.back().c == 0) t_.pop_back();
    } else if (t.c != 0) {
      t_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::monomial(const Monomial& m, Rational c) {
  Polynomial p(m.size());
  if (c != 0) p.t_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  return monomial(Monomial(nvars), std::move(c));
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.degree() != t_.front().m.degree()) return false;
  return true;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return 0;
}

Polynomial merge_sorted(const Polynomial& a, const Polynomial& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && j->m < i->m)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || i->m < j->m) {
      out.push_back({j->m, sign > 0 ? Rational(j->c) : Rational(-j->c)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->c + j->c) : Rational(i->c - j->c);
      if (c != 0) out.push_back({i->m, c});
      ++i, ++j;
    }
  }
  Polynomial r(std::max(a.nvars(), b.nvars()));
  r.t_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return merge_sorted(*this, o, 1); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return merge_sorted(*this, o, -1); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::map<Monomial, Rational> acc;
  for (const auto& a : t_)
    for (const auto& b : o.t_) acc[a.m * b.m] += a.c * b.c;
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return Polynomial(std::max(n_, o.n_), std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r(*this);
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial r(*this);
  for (auto& t : r.t_) t.m = t.m * m;
  return r;  // multiplication preserves the storage order
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != n_) throw Error("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& t : t_) {
    Rational v = t.c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (Monomial::Exp k = 0; k < t.m[i]; ++k) v *= x[i];
    }
    s += v;
  }
  return s;
}

const Term& Polynomial::leading(const TermOrder& order) const {
  if (t_.empty()) throw Error("leading term of zero polynomial");
  const Term* best = &t_.front();
  for (const auto& t : t_)
    if (order.cmp(t.m, best->m) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::primitive(const TermOrder& order) const {
  if (t_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : t_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
  std::vector<Term> out;
  for (const auto& t : t_) {
    Integer v = t.c.get_num() * (den / t.c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    out.push_back({t.m, Rational(v)});
  }
  Polynomial r(n_);
  r.t_ = std::move(out);
  Rational scale = Rational(1) / Rational(num);
  if (r.leading(order).c < 0) scale = -scale;
  return r * scale;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

Ideal::Ideal(Ring r, std::vector<Polynomial> g) : ring(std::move(r)) {
  for (auto& p : g) {
    if (p.nvars() != ring.size()) throw Error("generator does not belong to the ring");
    if (!p.is_zero()) generators.push_back(std::move(p));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& p) { return p.is_homogeneous(); });
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  std::string_view s;
  const Ring& ring;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(pos) + " in '" + std::string(s) +
                "': " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring.size());
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  bool starts_factor() {
    char c = peek();
    return std::isalnum((unsigned char)c) || c == '(' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek() == '*') {
        ++pos;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();  // juxtaposition, as in "ac-b^2"
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) fail("exponent expected");
      unsigned long e = std::stoul(std::string(s.substr(start, pos - start)));
      Polynomial r = Polynomial::constant(ring.size(), 1);
      for (unsigned long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial p = expr();
      if (peek() != ')') fail("')' expected");
      ++pos;
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      std::string num(s.substr(start, pos - start));
      if (pos < s.size() && s[pos] == '/') {
        std::size_t save = pos++;
        std::size_t ds = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (ds == pos) {
          pos = save;
        } else {
          num += "/" + std::string(s.substr(ds, pos - ds));
        }
      }
      Rational q(num);
      q.canonicalize();
      return Polynomial::constant(ring.size(), q);
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      // longest ring variable matching here
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto& n = ring.name(i);
        if (n.size() > best_len && s.substr(pos, n.size()) == n) {
          best = int(i);
          best_len = n.size();
        }
      }
      if (best < 0) fail("unknown variable");
      pos += best_len;
      return Polynomial::monomial(Monomial::variable(ring.size(), std::size_t(best)));
    }
    fail("unexpected character");
  }
};

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& x) {
    std::size_t i = 0;
    while (i < x.size() && !std::isdigit((unsigned char)x[i])) ++i;
    unsigned long n = i < x.size() ? std::stoul(x.substr(i)) : 0;
    return std::make_pair(x.substr(0, i), n);
  };
  auto pa = split(a), pb = split(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

std::string strip_vars_line(std::string_view text, std::optional<Ring>* ring_out) {
  std::string out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos && line.compare(a, 5, "vars:") == 0) {
      std::vector<std::string> names;
      std::string rest = line.substr(a + 5), cur;
      for (char ch : rest + ",") {
        if (ch == ',' || std::isspace((unsigned char)ch)) {
          if (!cur.empty()) names.push_back(cur), cur.clear();
        } else {
          cur += ch;
        }
      }
      if (ring_out) *ring_out = Ring(names);
      continue;
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Parser p{text, ring};
  if (p.at_end()) throw Error("empty polynomial");
  Polynomial r = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

Ring infer_ring(std::string_view text) {
  std::optional<Ring> declared;
  std::string body = strip_vars_line(text, &declared);
  if (declared) return *declared;
  std::set<std::string> names;
  for (std::size_t i = 0; i < body.size();) {
    if (std::isalpha((unsigned char)body[i])) {
      std::size_t j = i + 1;
      while (j < body.size() && std::isdigit((unsigned char)body[j])) ++j;
      names.insert(body.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  std::vector<std::string> v(names.begin(), names.end());
  std::sort(v.begin(), v.end(), natural_less);
  if (v.empty()) throw Error("cannot infer variables from ideal text");
  return Ring(v);
}

Ideal parse_ideal(std::string_view text, const std::optional<Ring>& ring) {
  std::optional<Ring> declared;
  std::string body = strip_vars_line(text, &declared);
  Ring R = ring ? *ring : declared ? *declared : infer_ring(body);
  // drop an enclosing "ideal(...)" or "(...)"
  std::size_t a = body.find_first_not_of(" \t\r\n");
  std::size_t b = body.find_last_not_of(" \t\r\n");
  if (a != std::string::npos) {
    std::string core = body.substr(a, b - a + 1);
    if (core.rfind("ideal", 0) == 0) core = core.substr(5);
    std::size_t c0 = core.find_first_not_of(" \t");
    if (c0 != std::string::npos && core[c0] == '(' && core.back() == ')') {
      int depth = 0;
      bool wraps = true;
      for (std::size_t i = c0; i < core.size(); ++i) {
        if (core[i] == '(') ++depth;
        if (core[i] == ')') --depth;
        if (depth == 0 && i + 1 < core.size()) {
          wraps = false;
          break;
        }
      }
      if (wraps) core = core.substr(c0 + 1, core.size() - c0 - 2);
    }
    body = core;
  } else {
    body.clear();
  }
  std::vector<Polynomial> gens;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t\r\n") != std::string::npos)
      gens.push_back(parse_polynomial(cur, R));
    cur.clear();
  };
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ',' || ch == '\n')) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return Ideal(R, std::move(gens));
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p, const Ring& ring, Tiebreak order) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
    return tiebreak_compare(order, a->m, b->m) > 0;
  });
  std::string s;
  for (const Term* t : ts) {
    Rational c = t->c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg) s += '-';
    else if (!s.empty()) s += '+';
    if (t->m.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += to_string(t->m, ring);
    }
  }
  return s;
}

std::string to_string(const Ideal& I) {
  std::string s;
  for (const auto& g : I.generators) {
    if (!s.empty()) s += ", ";
    s += to_string(g, I.ring);
  }
  return s;
}

std::vector<Monomial> degree_basis(std::size_t nvars, unsigned m, const TermOrder& order) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // compositions of m into nvars parts
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      cur.set(i, k);
      self(self, i + 1, left - k);
    }
    cur.set(i, 0);
  };
  if (nvars == 0) return out;
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.cmp(a, b) > 0; });
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hs
