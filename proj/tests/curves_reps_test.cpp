#include "helpers.hpp"

using namespace hs;
using namespace hs::test;

TEST_CASE("pluricanonical bases") {
  auto b4 = pluricanonical_basis(wiman_data(4));
  CHECK(b4 == std::vector<std::string>{"1", "x", "x^2", "x^3", "x^4", "x^5", "x^6", "y", "yx"});
  CHECK(pluricanonical_basis(wiman_data(3)).size() == 6);
  CHECK(pluricanonical_basis(wiman_data(5)).size() == 12);
  for (unsigned g = 4; g <= 8; ++g)
    for (unsigned nu = 2; nu <= 3; ++nu)
      CHECK(pluricanonical_basis(wiman_data(g, nu)).size() == (2 * nu - 1) * (g - 1));
}

TEST_CASE("Wiman ideals equal the stored ones generator for generator") {
  for (unsigned g : {3u, 4u}) {
    Ideal W = wiman_ideal(g), F = fixture("wiman_" + std::to_string(g));
    CHECK(W.ring == F.ring);
    CHECK(W.generators == F.generators);
  }
  CHECK(scroll_ideal(wiman_data(4)).generators.size() == 21);
}

TEST_CASE("pluricanonical ideals have the expected Hilbert polynomial") {
  for (unsigned g = 4; g <= 7; ++g)
    for (unsigned nu = 2; nu <= 3; ++nu) {
      if (nu == 3 && g > 5) continue;
      Ideal I = wiman_ideal(g, nu);
      for (unsigned m = 2; m <= 3; ++m)
        CHECK(truncated_hilbert(I, m).P_hat == Integer(2 * nu * (g - 1) * m - (g - 1)));
      // the curve is cut out by quadrics: no linear forms
      CHECK(truncated_hilbert(I, 1).Q_hat == 0);
    }
  HyperellipticData d;
  d.g = 4;
  d.f = rats({3, 0, 1, -2, 0, 0, 5, 0, 1, 7});
  Ideal I = hyperelliptic_pluricanonical_ideal(d);
  CHECK(truncated_hilbert(I, 3).P_hat == 33);
  d.f.back() = 0;
  CHECK_THROWS_AS(hyperelliptic_pluricanonical_ideal(d), Error);
}

TEST_CASE("every fixture parses with its stated ring") {
  for (const auto& name : fixture_names()) {
    Ideal I = fixture(name);
    CHECK(I.is_homogeneous());
    CHECK(I.generators.size() > 0);
  }
  CHECK(fixture("g2_weierstrass_tail").generators.size() == 50);
  CHECK(fixture("elliptic_bridge_diagonalized").generators.size() == 50);
  CHECK_THROWS_AS(fixture("no_such_curve"), Error);
}

TEST_CASE("nodal joins reproduce the stored genus-2 tail ideals") {
  Ring R = Ring::letters(12);
  Ideal W3 = extend_to_ambient(fixture("wiman_3_p7"), R);
  Ideal weier = intersect_ideals(W3, extend_to_ambient(fixture("wiman_2"), R));
  for (unsigned m = 2; m <= 3; ++m) CHECK(same_slice(weier, fixture("g2_weierstrass_tail"), m));
  // the stored general tail differs from the join by (j,k,l) -> (-j,-k,-l)
  Ideal general = intersect_ideals(W3, extend_to_ambient(fixture("g2_general_p4"), R));
  std::vector<Polynomial> flip;
  for (std::size_t i = 0; i < 12; ++i)
    flip.push_back(Polynomial::monomial(Monomial::variable(12, i)) * Rational(i >= 9 ? -1 : 1));
  Ideal flipped = general;
  for (auto& p : flipped.generators) p = substitute(p, flip);
  for (unsigned m = 2; m <= 3; ++m) CHECK(same_slice(flipped, fixture("g2_general_tail"), m));
}

TEST_CASE("Wiman actions are multiplicity free and fix the ideal") {
  for (unsigned g = 3; g <= 6; ++g) {
    const unsigned k = 2 * (g - 1), e = g + 1;
    std::vector<std::int64_t> w;
    if (k == e) {
      continue;  // the genus-3 model lives in the other chart
    }
    for (unsigned i = 0; i <= k; ++i) w.push_back(2 * i);
    for (unsigned i = 0; i <= k - e; ++i) w.push_back(2 * i + 2 * g + 1);
    auto a = make_action(4 * g + 2, w);
    CHECK(multiplicity_free({a}).multiplicity_free);
    CHECK(fixes_ideal(wiman_ideal(g), a));
  }
}

TEST_CASE("multiplicity freeness reports collisions") {
  auto r = multiplicity_free({make_action(5, {1, 2, 1})});
  CHECK_FALSE(r.multiplicity_free);
  REQUIRE(r.repeated.size() == 1);
  CHECK(r.repeated.front() == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(multiplicity_free({make_action(5, {1, 2, 1}), make_action(3, {0, 0, 1})}).multiplicity_free);
}

TEST_CASE("SL normalization") {
  auto a = sl_normalize(make_action(14, {5, 3, 10, 12, 0, 2, 4, 6, 6, 6, 6, 6}));
  CHECK(a.action.modulus == 42);
  CHECK(a.action.weights == std::vector<std::int64_t>{16, 10, 31, 37, 1, 7, 13, 19, 19, 19, 19, 19});
  auto b = sl_normalize(make_action(10, {8, 8, 8, 8, 8, 8, 8, 8, 6, 4, 2, 7}));
  CHECK(b.action.modulus == 120);
  CHECK(b.action.weights ==
        std::vector<std::int64_t>{103, 103, 103, 103, 103, 103, 103, 103, 79, 55, 31, 91});
  auto c = sl_normalize(make_action(6, {1, 2, 3}));
  CHECK(c.k == 1);
  CHECK(c.t == 0);
  for (int t = 0; t < 50; ++t) {
    std::int64_t n = uniform(1, 30);
    std::vector<std::int64_t> w;
    for (int i = 0, len = int(uniform(1, 8)); i < len; ++i) w.push_back(uniform(0, n - 1));
    auto in = make_action(n, w);
    auto out = sl_normalize(in);
    std::int64_t s = 0;
    for (auto x : out.action.weights) s += x;
    CHECK(s % out.action.modulus == 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) {
        std::int64_t d = out.action.weights[i] - out.action.weights[j] - out.k * (w[i] - w[j]);
        CHECK(d % out.action.modulus == 0);
      }
    CHECK(multiplicity_free({in}).multiplicity_free == multiplicity_free({out.action}).multiplicity_free);
  }
}

TEST_CASE("the two tail actions combine to a multiplicity-free action") {
  auto a = make_action(14, {5, 3, 10, 12, 0, 2, 4, 6, 6, 6, 6, 6});
  auto b = make_action(10, {8, 8, 8, 8, 8, 8, 8, 8, 6, 4, 2, 7});
  CHECK(fixes_ideal(fixture("g2_weierstrass_tail"), a));
  CHECK(fixes_ideal(fixture("g2_weierstrass_tail"), b));
  CHECK(multiplicity_free({a, b}).multiplicity_free);
}

TEST_CASE("plus-minus change of basis") {
  Ideal xy = parse_ideal("xy");
  auto pm = plusminus_basis_change(xy, {{0, 1}}, {});
  CHECK(pm.ring.names() == std::vector<std::string>{"A", "B"});
  CHECK(pm.generators.front() == parse_polynomial("A^2-B^2", pm.ring));
  Ideal id = plusminus_basis_change(fixture("twisted_cubic"), {}, {0, 1, 2, 3});
  Ideal tc(id.ring, fixture("twisted_cubic").generators);
  for (unsigned m = 2; m <= 3; ++m) CHECK(same_slice(id, tc, m));
  CHECK_THROWS_AS(plusminus_basis_change(xy, {{0, 1}}, {1}), Error);
  // applying the change twice returns the ideal (the factor 2 is absorbed)
  for (int t = 0; t < 8; ++t) {
    Ideal I = random_homogeneous_ideal(4, 2, 2, 4);
    auto once = plusminus_basis_change(I, {{0, 1}, {2, 3}}, {});
    auto twice = plusminus_basis_change(once, {{0, 1}, {2, 3}}, {});
    Ideal lower(Ring::letters(4), twice.generators);
    for (unsigned m = 2; m <= 3; ++m) CHECK(same_slice(lower, I, m));
  }
}

TEST_CASE("elliptic bridge: stated intersection and its symmetries") {
  Ideal E = fixture("elliptic_bridge");
  CHECK(fixture_components("elliptic_bridge").size() == 3);
  for (unsigned m = 2; m <= 4; ++m) CHECK(truncated_hilbert(E, m).P_hat == Integer(16 * m - 4));
  auto D1 = make_action(10, {7, 2, 4, 6, 8, 8, 8, 8, 8, 8, 8, 8});
  auto D2 = make_action(10, {8, 8, 8, 8, 8, 8, 8, 8, 6, 4, 2, 7});
  auto D3 = make_action(4, {2, 2, 2, 2, 2, 1, 0, 2, 2, 2, 2, 2});
  CHECK(fixes_ideal(E, D1));
  CHECK(fixes_ideal(E, D2));
  CHECK(fixes_ideal(E, D3));
  CHECK_FALSE(multiplicity_free({D1, D2, D3}).multiplicity_free);
  auto P = plusminus_basis_change(E, {{0, 11}, {1, 10}, {2, 9}, {3, 8}, {4, 7}}, {5, 6});
  auto D4 = make_action(240, {3, 3, 123, 123, 171, 171, 219, 219, 27, 27, 207, 147});
  auto A = make_action(240, {5, 125, 5, 125, 5, 125, 5, 125, 5, 125, 65, 5});
  CHECK(fixes_ideal(P, D4));
  CHECK(fixes_ideal(P, A));
  CHECK(multiplicity_free({D4, A}).multiplicity_free);
}
