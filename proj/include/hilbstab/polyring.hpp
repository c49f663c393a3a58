#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

using Rational = mpq_class;
using Integer = mpz_class;
using Weight = std::vector<std::int64_t>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  // a, b, c, ... for up to 26 variables, x0, x1, ... beyond that
  static Ring letters(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;

  bool operator==(const Ring& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  using Exp = std::uint32_t;
  using Storage = boost::container::small_vector<Exp, 14>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<Exp> e) : e_(e.begin(), e.end()) {}
  explicit Monomial(const std::vector<Exp>& e) : e_(e.begin(), e.end()) {}

  static Monomial variable(std::size_t nvars, std::size_t i, Exp power = 1);

  std::size_t size() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, Exp v) { e_[i] = v; }
  const Storage& exponents() const { return e_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // lexicographic on exponent vectors; a storage order, not a term order
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::size_t hash() const;

 private:
  Storage e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Tiebreak { grevlex, lex };

Tiebreak parse_tiebreak(std::string_view s);
const char* tiebreak_name(Tiebreak t);

struct OrderCmp {
  int sign = 0;               // -1, 0, +1
  bool tiebreak_used = false; // weights tied and the tiebreak decided
};

// Weight rows refined lexicographically, then the tiebreak. A plain weight
// order has one row; flips use (facet weight, -normal) pairs.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(Tiebreak tb) : tb_(tb) {}
  TermOrder(Weight w, Tiebreak tb = Tiebreak::grevlex);
  TermOrder(std::vector<Weight> rows, Tiebreak tb);

  const std::vector<Weight>& rows() const { return rows_; }
  Tiebreak tiebreak() const { return tb_; }
  Weight weights() const { return rows_.empty() ? Weight{} : rows_.front(); }

  OrderCmp compare(const Monomial& a, const Monomial& b) const;
  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b).sign; }
  // equal weight in every row
  bool weight_tie(const Monomial& a, const Monomial& b) const;

 private:
  std::vector<Weight> rows_;
  Tiebreak tb_ = Tiebreak::grevlex;
};

int tiebreak_compare(Tiebreak tb, const Monomial& a, const Monomial& b);

std::int64_t monomial_weight(const Weight& w, const Monomial& m);

struct Term {
  Monomial m;
  Rational c;
};

// Terms kept strictly descending in Monomial storage order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}
  Polynomial(std::size_t nvars, std::vector<Term> terms);  // normalizes
  static Polynomial monomial(const Monomial& m, Rational c = 1);
  static Polynomial constant(std::size_t nvars, Rational c);

  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_homogeneous() const;
  std::uint64_t degree() const;  // max total degree; 0 for zero
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Rational evaluate(const std::vector<Rational>& point) const;
  // scale to integer coefficients with content 1; leading sign per `order` made positive
  Polynomial primitive(const TermOrder& order) const;
  // the order-maximal term
  const Term& leading(const TermOrder& order) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend Polynomial merge_sorted(const Polynomial& a, const Polynomial& b, int sign);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<Term> t_;
};

struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(Ring r, std::vector<Polynomial> g);
  bool is_homogeneous() const;
};

Polynomial parse_polynomial(std::string_view text, const Ring& ring);
// Variables are inferred when `ring` is empty: single letters, or a letter
// followed by digits (x0, x12). A "vars: a,b,c" line fixes the ring.
Ideal parse_ideal(std::string_view text, const std::optional<Ring>& ring = std::nullopt);
Ring infer_ring(std::string_view text);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Polynomial& p, const Ring& ring,
                      Tiebreak order = Tiebreak::grevlex);
std::string to_string(const Ideal& I);  // comma separated generators

// all degree-m monomials, descending under `order`
std::vector<Monomial> degree_basis(std::size_t nvars, unsigned m,
                                   const TermOrder& order = TermOrder());

Integer binomial(unsigned long n, unsigned long k);

}  // namespace hs
