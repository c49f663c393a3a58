#include "hilbstab/reps.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace hs {

DiagonalAction make_action(std::int64_t modulus, const std::vector<std::int64_t>& weights) {
  if (modulus < 1) throw Error("modulus must be positive");
  DiagonalAction a;
  a.modulus = modulus;
  for (auto w : weights) a.weights.push_back(((w % modulus) + modulus) % modulus);
  return a;
}

MultiplicityReport multiplicity_free(const std::vector<DiagonalAction>& actions) {
  if (actions.empty()) throw Error("need at least one action");
  const std::size_t n = actions.front().weights.size();
  for (const auto& a : actions)
    if (a.weights.size() != n) throw Error("actions act on different numbers of coordinates");
  MultiplicityReport r;
  r.characters.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& a : actions) r.characters[i].push_back(a.weights[i]);
  std::map<std::vector<std::int64_t>, std::size_t> first;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = first.emplace(r.characters[i], i);
    if (!fresh) {
      r.multiplicity_free = false;
      r.repeated.push_back({it->second, i});
    }
  }
  return r;
}

SlNormalized sl_normalize(const DiagonalAction& a) {
  const std::int64_t n = a.modulus;
  const std::int64_t dim = std::int64_t(a.weights.size());
  std::int64_t sum = 0;
  for (auto w : a.weights) sum = (sum + w) % n;
  std::int64_t t0 = (n - sum) % n;
  std::int64_t g = std::gcd(dim, t0);
  SlNormalized out;
  out.k = dim / g;
  out.t = t0 / g;
  std::vector<std::int64_t> ws;
  for (auto w : a.weights) ws.push_back(out.k * w + out.t);
  out.action = make_action(out.k * n, ws);
  std::int64_t total = 0;
  for (auto w : out.action.weights) total = (total + w) % out.action.modulus;
  if (total != 0) throw Error("SL normalization failed to reach determinant one");
  return out;
}

namespace {

std::int64_t residue(const DiagonalAction& a, const Monomial& m) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < m.size(); ++i) r = (r + std::int64_t(m[i]) * a.weights[i]) % a.modulus;
  return r;
}

bool in_ideal(const Polynomial& p, const MarkedGroebnerBasis& G) {
  return normal_form(p, G).is_zero();
}

}  // namespace

bool fixes_ideal(const Ideal& I, const DiagonalAction& a) {
  if (a.weights.size() != I.ring.size()) throw Error("action and ring sizes differ");
  std::optional<MarkedGroebnerBasis> G;
  for (const auto& p : I.generators) {
    std::map<std::int64_t, std::vector<Term>> parts;
    for (const auto& t : p.terms()) parts[residue(a, t.m)].push_back(t);
    if (parts.size() <= 1) continue;
    if (!G) G = buchberger(I, TermOrder());
    for (auto& [r, ts] : parts)
      if (!in_ideal(Polynomial(p.nvars(), ts), *G)) return false;
  }
  return true;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.nvars()) throw Error("substitution needs one image per variable");
  const std::size_t n = images.empty() ? 0 : images.front().nvars();
  Polynomial out(n);
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial r = Polynomial::constant(n, 1);
    for (unsigned k = 0; k < e; ++k) r = r * images[i];
    return powers.emplace(key, std::move(r)).first->second;
  };
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(n, t.c);
    for (std::size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i]) term = term * power(i, t.m[i]);
    out += term;
  }
  return out;
}

bool preserves_ideal(const Ideal& I, const std::vector<Polynomial>& images) {
  auto G = buchberger(I, TermOrder());
  for (const auto& p : I.generators)
    if (!in_ideal(substitute(p, images), G)) return false;
  return true;
}

Ideal plusminus_basis_change(const Ideal& I,
                             const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
                             const std::vector<std::size_t>& fixed) {
  const std::size_t n = I.ring.size();
  if (2 * swaps.size() + fixed.size() != n)
    throw Error("swaps and fixed coordinates must cover every variable exactly once");
  auto X = [n](std::size_t i) { return Polynomial::monomial(Monomial::variable(n, i)); };
  std::vector<Polynomial> images(n);
  std::vector<bool> seen(n, false);
  auto claim = [&](std::size_t i) {
    if (i >= n || seen[i]) throw Error("swap and fixed index sets overlap or are out of range");
    seen[i] = true;
  };
  const Rational half(1, 2);
  std::size_t next = 0;
  for (auto [i, j] : swaps) {
    claim(i);
    claim(j);
    images[i] = (X(next) + X(next + 1)) * half;
    images[j] = (X(next) - X(next + 1)) * half;
    next += 2;
  }
  for (auto i : fixed) {
    claim(i);
    images[i] = X(next++);
  }
  std::vector<std::string> names;
  const Ring lower = Ring::letters(n);
  for (const auto& s : lower.names()) {
    std::string u = s;
    for (auto& ch : u) ch = char(std::toupper((unsigned char)ch));
    names.push_back(u);
  }
  Ideal out;
  out.ring = Ring(names);
  for (const auto& p : I.generators) {
    Polynomial q = substitute(p, images);
    if (!q.is_zero()) out.generators.push_back(q.primitive(TermOrder()));
  }
  return out;
}

std::vector<Polynomial> permutation_images(std::size_t nvars, const std::vector<std::size_t>& perm) {
  if (perm.size() != nvars) throw Error("permutation length must equal the number of variables");
  std::vector<Polynomial> out;
  for (auto k : perm) {
    if (k >= nvars) throw Error("permutation entry out of range");
    out.push_back(Polynomial::monomial(Monomial::variable(nvars, k)));
  }
  return out;
}

}  // namespace hs
