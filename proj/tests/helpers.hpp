#pragma once

#include "hilbstab/curves.hpp"
#include "hilbstab/lp.hpp"
#include "hilbstab/reps.hpp"
#include "hilbstab/stability.hpp"

#include <doctest.h>

#include <random>

namespace hs::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Polynomial random_polynomial(std::size_t n, unsigned deg, std::size_t terms, bool homogeneous) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(n);
    unsigned d = homogeneous ? deg : unsigned(uniform(0, deg));
    for (unsigned e = 0; e < d; ++e) {
      auto i = std::size_t(uniform(0, std::int64_t(n) - 1));
      m.set(i, m[i] + 1);
    }
    Rational c(uniform(-5, 5));
    if (c == 0) c = 1;
    ts.push_back({m, c});
  }
  return Polynomial(n, ts);
}

inline Ideal random_homogeneous_ideal(std::size_t n, unsigned deg, std::size_t gens, std::size_t terms) {
  std::vector<Polynomial> g;
  while (g.size() < gens) {
    auto p = random_polynomial(n, deg, terms, true);
    if (!p.is_zero()) g.push_back(p);
  }
  return Ideal(Ring::letters(n), g);
}

inline Weight random_weight(std::size_t n, std::int64_t range = 50) {
  Weight w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(uniform(-range, range));
  return w;
}

inline MonomialIdeal monomials(const std::string& text, const Ring& R) {
  std::vector<Monomial> g;
  for (const auto& p : parse_ideal(text, R).generators) g.push_back(p.terms().front().m);
  return MonomialIdeal(R, g);
}

inline Rational frac(std::int64_t a, std::int64_t b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace hs::test
