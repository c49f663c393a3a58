#pragma once

#include "hilbstab/fan.hpp"

namespace hs {

enum class Convention { inside, outside };

Convention parse_convention(std::string_view s);
const char* convention_name(Convention c);

using RatVec = std::vector<Rational>;

// Sum of exponent vectors of degree-m monomials inside (or outside) an ideal.
struct Character {
  std::vector<Integer> coords;
  unsigned m = 0;
  Convention convention = Convention::inside;

  RatVec rational() const;
  friend bool operator==(const Character& a, const Character& b) {
    return a.m == b.m && a.convention == b.convention && a.coords == b.coords;
  }
  friend bool operator<(const Character& a, const Character& b) { return a.coords < b.coords; }
};

struct Barycenter {
  RatVec coords;
  unsigned m = 0;
  Convention convention = Convention::inside;
};

Character degree_state(const MonomialIdeal& J, unsigned m, Convention c);
// initial ideal of I under w (with tiebreak), then its degree-m state
Character degree_state(const Ideal& I, const Weight& w, unsigned m, Convention c,
                       Tiebreak tb = Tiebreak::grevlex, bool* tiebreak_consulted = nullptr);

// sigma_m - c, where sigma_m has every coordinate m * R(m) / (N+1)
Character convert_convention(const Character& c, std::size_t nvars);
Barycenter convert_convention(const Barycenter& b, std::size_t nvars);
// coordinate of sigma_m: C(m+N, N+1)
Integer sigma_coordinate(std::size_t nvars, unsigned m);

Barycenter barycenter(const Ideal& I, unsigned m, Convention c);
Barycenter barycenter_from_hilbert(const HilbertData& h, std::size_t nvars, Convention c);

enum class Containment { outside, on_boundary_or_degenerate, full_dim_interior };
const char* containment_name(Containment c);

struct ContainmentVerdict {
  Containment status = Containment::outside;
  // outside: <s, p> < <s, target> for every point p
  std::vector<Integer> separating;
  // contained: convex multipliers reproducing the target, strictly positive
  // whenever the target is in the relative interior
  RatVec multipliers;
  int affine_dimension = -1;
  // N when all points and the target share a coordinate sum (characters of
  // one degree do), N+1 otherwise
  int ambient_dimension = -1;
  bool relative_interior = false;
};

ContainmentVerdict classify_containment(const std::vector<RatVec>& points, const RatVec& target);
ContainmentVerdict classify_containment(const std::vector<Character>& points,
                                        const Barycenter& target);
// exact re-check of the stored certificate
bool verify_containment(const ContainmentVerdict& v, const std::vector<RatVec>& points,
                        const RatVec& target);

struct Proximum {
  RatVec point;
  std::vector<Integer> direction;  // primitive multiple of point - target
  std::vector<std::size_t> support;  // vertices carrying the convex combination
  RatVec weights;                    // their multipliers
  Rational min_gap;                  // min over vertices of <p - t, q - p>, >= 0
  bool kkt_verified = false;
};

Proximum proximum(const std::vector<RatVec>& points, const RatVec& target);
Proximum proximum(const std::vector<Character>& points, const Barycenter& target);
bool verify_proximum(const Proximum& p, const std::vector<RatVec>& points, const RatVec& target);

// Q(m) x R(m) echelon matrix of I_m; columns in lex-descending monomial order
struct HilbertMatrix {
  std::vector<Monomial> columns;
  std::vector<RatVec> rows;
};
HilbertMatrix hilbert_matrix(const Ideal& I, unsigned m);

// Maximal minors of the Hilbert matrix over all Pluecker sets, the sets taken
// in colex order of their sorted column indices; content 1 with the first
// nonzero coordinate positive.
struct PlueckerPoint {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<Integer> coords;
};
PlueckerPoint pluecker_coordinates(const Ideal& I, unsigned m, std::uint64_t budget = 1000000);

struct StatePolytope {
  std::vector<Character> vertices;  // sorted, distinct
  bool complete = true;
  std::string stop_reason;
  std::size_t cones = 0;
};
// characters of all degree-m initial spaces in(I)_m
StatePolytope state_polytope(const Ideal& I, unsigned m, Convention c, const FanOptions& opts = {});
// distinct degree-m characters of a full fan
StatePolytope state_polytope(const FanEnumeration& F, unsigned m, Convention c);

}  // namespace hs
