#pragma once

#include "hilbstab/groebner.hpp"

namespace hs {

// y^2 = f(x) with deg f = 2g + 1, embedded by nu times the canonical class
// plus nu times the point at infinity. Coordinates: 1, x, ..., x^k, then
// y, y x, ..., y x^(k-e), where k = nu(g - 1) and e = g + 1.
struct HyperellipticData {
  unsigned g = 0;
  std::vector<Rational> f;  // f[i] = coefficient of x^i, size 2g + 2
  unsigned nu = 2;

  unsigned k() const { return nu * (g - 1); }
  unsigned e() const { return g + 1; }
};

HyperellipticData wiman_data(unsigned g, unsigned nu = 2);  // f = x^(2g+1) - 1

// names of the coordinate functions: "1", "x", "x^2", ..., "y", "yx", ...
std::vector<std::string> pluricanonical_basis(const HyperellipticData& d);
// 2x2 minors of the scroll matrix, column pairs in colex order
Ideal scroll_ideal(const HyperellipticData& d);
// scroll minors plus the quadrics y^2 x^i = x^i f(x), i = 0 .. 2(k - e)
Ideal hyperelliptic_pluricanonical_ideal(const HyperellipticData& d);
Ideal wiman_ideal(unsigned g, unsigned nu = 2);

// Same generators in a bigger ring (variables matched by name) together with
// every ambient variable that is not a variable of I.
Ideal extend_to_ambient(const Ideal& I, const Ring& ambient);

// Stored curve ideals. Names: twisted_cubic, two_points_p2, cuspidal_cubic,
// ribbon_g4, wiman_2 .. wiman_8, elliptic_bridge, elliptic_bridge_diagonalized,
// g2_weierstrass_tail, g2_general_tail, wiman_3_p7, g2_general_p4.
std::vector<std::string> fixture_names();
std::string fixture_text(std::string_view name);
Ideal fixture(std::string_view name);
// components of a fixture stored as an intersection (empty otherwise)
std::vector<Ideal> fixture_components(std::string_view name);
// the monomial ideals of the wiman_4_whittled list
std::vector<MonomialIdeal> whittled_initial_ideals();

}  // namespace hs
