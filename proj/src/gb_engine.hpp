#pragma once
// Order-sorted polynomial kernels shared by groebner and fan.

#include "hilbstab/groebner.hpp"

#include <deque>

namespace hs::detail {

using OPoly = std::vector<Term>;  // strictly descending under the active order

inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) b |= std::uint64_t(1) << (i % 64);
  return b;
}

struct Lead {
  Monomial m;
  std::uint64_t mask = 0;
  std::uint64_t deg = 0;
};

inline Lead make_lead(const Monomial& m) { return {m, support_mask(m), m.degree()}; }

OPoly to_ordered(const Polynomial& p, const TermOrder& ord);
Polynomial from_ordered(const OPoly& p, std::size_t nvars);
void make_monic(OPoly& p);

// f - c * mono * g, all inputs ordered
OPoly sub_scaled(const OPoly& f, std::size_t fstart, const Rational& c, const Monomial& mono,
                 const OPoly& g, const TermOrder& ord);

class Reducer {
 public:
  explicit Reducer(const TermOrder& ord) : ord_(ord) {}
  void add(const OPoly* monic_poly);
  int find_divisor(const Monomial& m) const;
  OPoly reduce(OPoly f) const;  // full reduction
  std::size_t size() const { return polys_.size(); }

 private:
  const TermOrder& ord_;
  std::vector<const OPoly*> polys_;
  std::vector<Lead> leads_;
};

// minimal, tail-reduced, monic; input must be a Groebner basis under `ord`
std::vector<OPoly> interreduce(std::vector<OPoly> basis, const TermOrder& ord);

MarkedGroebnerBasis package(const Ring& ring, const TermOrder& ord, std::vector<OPoly> reduced,
                            int truncated_at);

std::vector<OPoly> buchberger_core(std::vector<OPoly> inputs, const TermOrder& ord,
                                   const GBOptions& opts);

}  // namespace hs::detail
