#include "helpers.hpp"

using namespace hs;
using namespace hs::test;

TEST_CASE("parse and print round trip") {
  Ideal I = parse_ideal("ac-b^2, ad-bc, bd-c^2");
  CHECK(I.ring.names() == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(I.generators.size() == 3);
  Ideal J = parse_ideal(to_string(I), I.ring);
  CHECK(J.generators == I.generators);
  CHECK(I.is_homogeneous());
}

TEST_CASE("vars line fixes the ring") {
  Ideal I = parse_ideal("vars: x,y,z\nx^2z-y^3");
  CHECK(I.ring.size() == 3);
  CHECK(I.generators.front().degree() == 3);
}

TEST_CASE("parser handles coefficients, products and powers") {
  Ring R = Ring::letters(3);
  auto p = parse_polynomial("2*a^2 - 3/2 b*c + (a+b)^2", R);
  auto q = parse_polynomial("3a^2 + 2ab + b^2 - 3/2bc", R);
  CHECK(p == q);
  CHECK_THROWS_AS(parse_polynomial("a +* b", R), Error);
}

TEST_CASE("ring arithmetic laws on random polynomials") {
  for (int t = 0; t < 40; ++t) {
    auto p = random_polynomial(4, 3, 5, false), q = random_polynomial(4, 3, 5, false),
         r = random_polynomial(4, 2, 4, false);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) - q == p);
    CHECK((p * q) * r == p * (q * r));
    std::vector<Rational> pt{Rational(uniform(-3, 3)), Rational(uniform(-3, 3)), Rational(1, 2), Rational(2)};
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("weight orders are total and multiplicative") {
  for (int t = 0; t < 30; ++t) {
    TermOrder ord(random_weight(4), t % 2 ? Tiebreak::lex : Tiebreak::grevlex);
    auto basis = degree_basis(4, 3);
    for (int k = 0; k < 20; ++k) {
      const auto& a = basis[std::size_t(uniform(0, std::int64_t(basis.size()) - 1))];
      const auto& b = basis[std::size_t(uniform(0, std::int64_t(basis.size()) - 1))];
      int s = ord.cmp(a, b);
      CHECK(s == -ord.cmp(b, a));
      CHECK((s == 0) == (a == b));
      Monomial c = Monomial::variable(4, std::size_t(uniform(0, 3)), 2);
      CHECK(ord.cmp(a * c, b * c) == s);
    }
  }
}

TEST_CASE("degree basis has the binomial count and is sorted") {
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      TermOrder ord(Weight(n, 0));
      auto B = degree_basis(n, m, ord);
      CHECK(Integer(B.size()) == binomial(n + m - 1, m));
      for (std::size_t i = 1; i < B.size(); ++i) CHECK(ord.cmp(B[i - 1], B[i]) > 0);
    }
}

TEST_CASE("grevlex and lex tiebreaks on a tied pair") {
  // x^2z and y^3 tie under (4,1,-5)
  TermOrder g(Weight{4, 1, -5}, Tiebreak::grevlex), l(Weight{4, 1, -5}, Tiebreak::lex);
  Monomial x2z{2, 0, 1}, y3{0, 3, 0};
  CHECK(g.weight_tie(x2z, y3));
  CHECK(g.cmp(y3, x2z) > 0);
  CHECK(l.cmp(x2z, y3) > 0);
  CHECK(g.compare(y3, x2z).tiebreak_used);
}
