#pragma once

#include "hilbstab/groebner.hpp"

#include <cstdint>
#include <random>

namespace hs {

using IntVec = std::vector<std::int64_t>;

struct GroebnerCone {
  MarkedGroebnerBasis basis;
  MonomialIdeal initial;          // generated by the marks
  std::vector<IntVec> inequalities;  // primitive, deduplicated: <w, v> >= 0
  std::vector<IntVec> facets;        // irredundant subset
  std::vector<IntVec> facet_points;  // a relative-interior weight per facet
  Weight witness;                    // interior weight
  bool degenerate = false;
  int degree = -1;  // >= 0 when the basis is an echelon basis of I_degree
};

// Cone of weights selecting the marking of G. Facet points are optional
// because only traversal needs them.
GroebnerCone groebner_cone(const MarkedGroebnerBasis& G, bool with_facet_points = false);

// Neighbouring cone across facet `j` (requires facet points).
GroebnerCone flip(const GroebnerCone& C, std::size_t j, const GBOptions& opts = {});

struct FanOptions {
  std::size_t max_cones = 0;  // 0 = unlimited
  double max_seconds = 0;     // 0 = unlimited
  unsigned workers = 1;
  Tiebreak tiebreak = Tiebreak::grevlex;
  std::optional<Weight> start;
  // >= 0: enumerate degree-m initial spaces in(I)_m instead of initial ideals
  int degree = -1;
};

struct FanEnumeration {
  Ring ring;
  int degree = -1;
  std::vector<GroebnerCone> cones;  // sorted by initial ideal
  bool complete = true;
  std::string stop_reason;
};

FanEnumeration enumerate_initial_ideals(const Ideal& I, const FanOptions& opts = {});

// Marked basis of I_m under `order`: rows of the reduced echelon form.
MarkedGroebnerBasis degree_marked_basis(const Ideal& I, unsigned m, const TermOrder& order);

// Seeded source of integer weights with pairwise distinct coordinates in [lo, hi].
class WeightStream {
 public:
  WeightStream(std::uint64_t seed, std::int64_t lo = -1000000, std::int64_t hi = 1000000);
  Weight next(std::size_t dim);

 private:
  std::mt19937_64 rng_;
  std::int64_t lo_, hi_;
};

Weight random_generic_weight(std::size_t dim, std::uint64_t seed, std::int64_t lo = -1000000,
                             std::int64_t hi = 1000000);

}  // namespace hs
