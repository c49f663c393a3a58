#include "helpers.hpp"

#include <set>

using namespace hs;
using namespace hs::test;

TEST_CASE("twisted cubic has the eight listed initial ideals") {
  Ideal I = fixture("twisted_cubic");
  auto F = enumerate_initial_ideals(I);
  REQUIRE(F.complete);
  std::set<MonomialIdeal> got;
  for (const auto& c : F.cones) got.insert(c.initial);
  std::set<MonomialIdeal> want;
  for (const char* s : {"bd,ad,ac", "c^2,ad,ac", "c^2,bc,ac,a^2d", "c^2,bc,b^3,ac", "c^2,bc,b^2",
                        "bd,b^2,ad", "bd,bc,b^2,ad^2", "c^3,bd,bc,b^2"})
    want.insert(monomials(s, I.ring));
  CHECK(got == want);
  CHECK(state_polytope(F, 2, Convention::inside).vertices.size() == 6);
  CHECK(state_polytope(F, 3, Convention::inside).vertices.size() == 8);
}

TEST_CASE("cone witnesses reproduce their initial ideals and facets are honest") {
  for (const char* name : {"twisted_cubic", "cuspidal_cubic", "ribbon_g4"}) {
    Ideal I = fixture(name);
    auto F = enumerate_initial_ideals(I);
    REQUIRE(F.complete);
    for (const auto& c : F.cones) {
      CHECK(initial_ideal(I, c.witness).ideal == c.initial);
      for (const auto& v : c.inequalities) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * c.witness[i];
        CHECK(s > 0);
      }
      for (unsigned m = 1; m <= 4; ++m)
        CHECK(hilbert_from_leads(c.initial, m).P_hat == truncated_hilbert(I, m).P_hat);
    }
    // random weights land on listed ideals
    std::set<MonomialIdeal> all;
    for (const auto& c : F.cones) all.insert(c.initial);
    for (int t = 0; t < 30; ++t) CHECK(all.count(initial_ideal(I, random_weight(I.ring.size(), 100000)).ideal));
  }
}

TEST_CASE("fan enumeration does not depend on the number of workers") {
  Ideal I = fixture("ribbon_g4");
  FanOptions one, four;
  four.workers = 4;
  auto A = enumerate_initial_ideals(I, one), B = enumerate_initial_ideals(I, four);
  REQUIRE(A.cones.size() == B.cones.size());
  for (std::size_t k = 0; k < A.cones.size(); ++k) CHECK(A.cones[k].initial == B.cones[k].initial);
}

TEST_CASE("cone budget stops the traversal and says so") {
  FanOptions o;
  o.max_cones = 3;
  auto F = enumerate_initial_ideals(fixture("ribbon_g4"), o);
  CHECK_FALSE(F.complete);
  CHECK_FALSE(F.stop_reason.empty());
}

TEST_CASE("degree-m fan yields the same characters as the full fan") {
  for (const char* name : {"twisted_cubic", "ribbon_g4"}) {
    Ideal I = fixture(name);
    auto F = enumerate_initial_ideals(I);
    for (unsigned m = 2; m <= 4; ++m) {
      auto a = state_polytope(F, m, Convention::inside);
      auto b = state_polytope(I, m, Convention::inside);
      CHECK(b.complete);
      CHECK(a.vertices == b.vertices);
    }
  }
}

TEST_CASE("weight streams are reproducible and generic") {
  WeightStream a(7), b(7);
  for (int k = 0; k < 20; ++k) {
    auto w = a.next(9);
    CHECK(w == b.next(9));
    std::set<std::int64_t> s(w.begin(), w.end());
    CHECK(s.size() == w.size());
  }
}
