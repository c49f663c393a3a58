#include "helpers.hpp"

using namespace hs;
using namespace hs::test;

TEST_CASE("mu values of the destabilizing weights") {
  Ideal W3 = fixture("wiman_3");
  CHECK(mu(W3, {10, 10, 10, 10, 10, 12}, 2).value == -4);
  CHECK(mu(W3, {10, 10, 10, 10, 10, 12}, 3).value == 24);
  Ideal W4 = fixture("wiman_4");
  Weight w4{-2, -2, -2, -2, -2, -2, -2, 7, 7};
  CHECK(mu(W4, w4, 2).value == 108);
  CHECK(mu(W4, w4, 3).value == 648);
  CHECK(mu(W4, w4, 4).value == 1620);
}

TEST_CASE("mu is centered and homogeneous in the weight") {
  for (const char* name : {"twisted_cubic", "ribbon_g4", "wiman_3"}) {
    Ideal I = fixture(name);
    const std::size_t n = I.ring.size();
    for (int t = 0; t < 8; ++t) {
      Weight w = random_weight(n, 1000);
      unsigned m = 2 + unsigned(t % 2);
      Integer base = mu(I, w, m).value;
      Weight shifted = w, scaled = w;
      std::int64_t c = uniform(-50, 50), k = uniform(1, 6);
      for (std::size_t i = 0; i < n; ++i) shifted[i] += c, scaled[i] *= k;
      CHECK(mu(I, shifted, m).value == base);
      CHECK(mu(I, scaled, m).value == Integer(k) * base);
      // negating the weight and the sign of the index: the character is extremal both ways
      auto ch = degree_state(I, w, m, Convention::inside);
      CHECK(mu_of_character(ch, w, truncated_hilbert(I, m).Q_hat) == base);
    }
  }
}

TEST_CASE("parabola fit") {
  auto p = parabola_fit({2, -4}, {3, 24});
  CHECK(p.A == 16);
  CHECK(p.B == -36);
  CHECK(p.to_string() == "4(m-1)(4m-9)");
  CHECK(*p.root() == Rational(9, 4));
  auto q = parabola_fit({2, 108}, {3, 648});
  CHECK(q.to_string() == "108(m-1)(2m-3)");
  CHECK(q(4) == 1620);
  auto z = parabola_fit({2, -12}, {3, -24});
  CHECK(z.A == 0);
  CHECK(z(4) == -36);
  CHECK_THROWS_AS(parabola_fit({2, 1}, {2, 3}), Error);
  CHECK_THROWS_AS(parabola_fit({1, 0}, {3, 3}), Error);
  // any two degrees of a parabola recover it
  for (int t = 0; t < 20; ++t) {
    MuPolynomial r;
    r.A = frac(uniform(-20, 20), uniform(1, 4));
    r.B = frac(uniform(-20, 20), uniform(1, 4));
    Rational m1 = uniform(2, 9), m2 = m1 + uniform(1, 5);
    auto f = parabola_fit({m1, r(m1)}, {m2, r(m2)});
    CHECK(f.A == r.A);
    CHECK(f.B == r.B);
  }
}

TEST_CASE("Monte Carlo is reproducible and replays") {
  Ideal I = fixture("twisted_cubic");
  MonteCarloOptions o;
  o.seed = 11;
  auto a = monte_carlo_check(I, 2, o);
  o.workers = 3;
  auto b = monte_carlo_check(I, 2, o);
  // a one-dimensional torus fixes the twisted cubic, so its characters span a
  // plane and the barycenter can only be relatively interior
  CHECK(a.kind == CertificateKind::semistable);
  CHECK(a.verdict.relative_interior);
  CHECK(a.characters == b.characters);
  CHECK(a.weights == b.weights);
  auto r = verify_certificate(I, 2, a.weights);
  CHECK(r.verdict.status == Containment::on_boundary_or_degenerate);
  CHECK(r.characters.size() == a.characters.size());
}

TEST_CASE("Monte Carlo on an unstable curve stays inconclusive") {
  MonteCarloOptions o;
  o.max_rounds = 3;
  auto c = monte_carlo_check(fixture("cuspidal_cubic"), 3, o);
  CHECK(c.kind == CertificateKind::inconclusive);
  CHECK(c.verdict.status == Containment::outside);
}

TEST_CASE("separation-guided weights yield destabilizing witnesses") {
  for (const auto& [name, m] : std::vector<std::pair<const char*, unsigned>>{
           {"cuspidal_cubic", 3}, {"wiman_3", 2}, {"ribbon_g4", 3}}) {
    Ideal I = fixture(name);
    auto c = monte_carlo_check(I, m);
    CHECK(c.kind == CertificateKind::inconclusive);
    REQUIRE(c.destabilizing);
    CHECK(mu(I, *c.destabilizing, m).value < 0);
    // its character was recorded with the others
    auto ch = degree_state(I, *c.destabilizing, m, Convention::inside);
    CHECK(std::find(c.characters.begin(), c.characters.end(), ch) != c.characters.end());
  }
}

TEST_CASE("guided and unguided Monte Carlo agree on stable curves") {
  Ideal I = fixture("wiman_3");
  MonteCarloOptions o;
  o.seed = 5;
  auto guided = monte_carlo_check(I, 3, o);
  o.guided_steps = 0;
  auto plain = monte_carlo_check(I, 3, o);
  CHECK(guided.kind == CertificateKind::stable);
  CHECK(plain.kind == CertificateKind::stable);
  CHECK(plain.guided_weights == 0);
  CHECK(verify_certificate(I, 3, guided.weights).verdict.status == Containment::full_dim_interior);
}

TEST_CASE("polarization slope") {
  auto s = polarization_slope(2, 2);
  CHECK(s.lambda_coeff == 37);
  CHECK(s.slope == Rational(37, 4));
  CHECK(polarization_slope_limit(2) == 10);
  // the slope increases towards the limit as m grows
  Rational prev = polarization_slope(2, 2).slope;
  for (int m = 3; m < 40; ++m) {
    Rational cur = polarization_slope(2, m).slope;
    CHECK(cur > prev);
    CHECK(cur < polarization_slope_limit(2));
    prev = cur;
  }
}

TEST_CASE("sampled Chow state agrees with the full fan") {
  Ideal I = fixture("ribbon_g4");
  auto F = enumerate_initial_ideals(I);
  auto full = chow_state(I, F, 1, 6);
  MonteCarloOptions o;
  o.seed = 3;
  auto sampled = chow_monte_carlo_check(I, 1, o, 6);
  CHECK(sampled.contained);
  CHECK(sampled.state.barycenter == full.barycenter);
  CHECK(sampled.state.verdict.status == full.verdict.status);
  // every sampled vertex is a vertex of the full computation
  for (const auto& v : sampled.state.vertices)
    CHECK(std::find(full.vertices.begin(), full.vertices.end(), v) != full.vertices.end());
}
