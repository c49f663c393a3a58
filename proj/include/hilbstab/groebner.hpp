#pragma once

#include "hilbstab/polyring.hpp"

#include <chrono>
#include <functional>
#include <optional>

namespace hs {

struct BudgetExceeded : Error {
  using Error::Error;
};

using Clock = std::chrono::steady_clock;

struct GBOptions {
  // homogeneous input only: drop everything above this degree (-1 = none)
  int max_degree = -1;
  std::optional<Clock::time_point> deadline;
};

struct MarkedGroebnerBasis {
  Ring ring;
  TermOrder order;
  std::vector<Polynomial> elements;  // monic in the marked term
  std::vector<Monomial> marks;
  bool reduced = false;
  bool tiebreak_consulted = false;  // some element ties its mark on weight
  int truncated_at = -1;

  std::size_t size() const { return elements.size(); }
  Ideal ideal() const { return Ideal(ring, elements); }
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);  // minimalizes and sorts

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t nvars() const { return ring_.size(); }

  bool contains(const Monomial& m) const;
  std::uint64_t max_generator_degree() const;

  // standard (non-member) monomials of degree m
  void for_each_standard(unsigned m, const std::function<void(const Monomial&)>& f) const;
  Integer count_standard(unsigned m) const;
  std::vector<Integer> standard_exponent_sum(unsigned m) const;

  std::vector<std::string> to_strings() const;
  Ideal ideal() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ < b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

struct HilbertData {
  unsigned m = 0;
  Integer R_hat, Q_hat, P_hat;
};

MarkedGroebnerBasis buchberger(const Ideal& I, const TermOrder& order,
                               const GBOptions& opts = {});

Polynomial normal_form(const Polynomial& p, const MarkedGroebnerBasis& G);

struct InitialIdealResult {
  MonomialIdeal ideal;
  bool tiebreak_consulted = false;
  MarkedGroebnerBasis basis;
};

InitialIdealResult initial_ideal(const Ideal& I, const Weight& w,
                                 Tiebreak tb = Tiebreak::grevlex, const GBOptions& opts = {});

// in_w(g) for every basis element: the ideal of initial forms
Ideal initial_forms(const MarkedGroebnerBasis& G, const Weight& w);

Ideal intersect_ideals(const Ideal& I, const Ideal& J);

HilbertData truncated_hilbert(const Ideal& I, unsigned m);
HilbertData hilbert_from_leads(const MonomialIdeal& leads, unsigned m);

// C(a,2) + b for P(t) = a t + b
Integer gotzmann_number(const Integer& a, const Integer& b);

// Row-reduced basis of I_m in the given column order; pivots give in(I)_m.
struct DegreeSlice {
  std::vector<Monomial> columns;
  std::vector<std::vector<Rational>> rows;  // RREF
  std::vector<std::size_t> pivots;          // column index per row
};
DegreeSlice degree_slice(const Ideal& I, unsigned m, const TermOrder& order = TermOrder());
bool same_slice(const Ideal& I, const Ideal& J, unsigned m);

}  // namespace hs
