#include "helpers.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace hs;
using namespace hs::test;

namespace {

using linalg::Mat;
using linalg::Vec;

// minimum of c.x over basic feasible solutions, by enumerating every basis
std::optional<Rational> brute_force_lp(const Mat& A, const Vec& b, const Vec& c) {
  const std::size_t m = A.size(), n = c.size();
  std::optional<Rational> best;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + std::ptrdiff_t(m), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) cols.push_back(j);
    Mat B(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) B[i][k] = A[i][cols[k]];
    auto x = linalg::solve(B, b);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; })) continue;
    Rational val = 0;
    for (std::size_t k = 0; k < m; ++k) val += c[cols[k]] * (*x)[k];
    if (!best || val < *best) best = val;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

Rational sq(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// squared distance from t to the hull, by projecting onto the affine hull of
// every subset and keeping projections with nonnegative coordinates
Rational brute_force_distance(const std::vector<RatVec>& P, const RatVec& t) {
  const std::size_t k = P.size(), d = t.size();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) S.push_back(i);
    if (S.size() > d + 1) continue;
    // minimize |sum l_i p_i - t|^2 with sum l_i = 1: KKT linear system
    const std::size_t s = S.size();
    Mat M(s + 1, Vec(s + 1, 0));
    Vec rhs(s + 1, 0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) M[i][j] = linalg::dot(P[S[i]], P[S[j]]);
      M[i][s] = 1;
      M[s][i] = 1;
      rhs[i] = linalg::dot(P[S[i]], t);
    }
    rhs[s] = 1;
    auto l = linalg::solve(M, rhs);
    if (!l) continue;
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) ok = ok && (*l)[i] >= 0;
    if (!ok) continue;
    RatVec x(d, 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t c = 0; c < d; ++c) x[c] += (*l)[i] * P[S[i]][c];
    Rational v = sq(x, t);
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

TEST_CASE("simplex agrees with basis enumeration") {
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 2 + std::size_t(t % 2), n = 5;
    Mat A(m, Vec(n));
    Vec b(m), c(n);
    for (auto& row : A)
      for (auto& v : row) v = uniform(-3, 4);
    for (auto& v : b) v = uniform(0, 6);
    for (auto& v : c) v = uniform(-4, 4);
    // bound the region: sum x <= 10 via a slack column
    for (auto& row : A) row.push_back(0);
    A.push_back(Vec(n + 1, 1));
    b.push_back(10);
    c.push_back(0);
    auto r = solve_lp(A, b, c);
    auto o = brute_force_lp(A, b, c);
    REQUIRE(r.status != LPStatus::unbounded);
    CHECK((r.status == LPStatus::optimal) == o.has_value());
    if (r.status == LPStatus::optimal) {
      CHECK(r.value == *o);
      for (std::size_t i = 0; i < A.size(); ++i) CHECK(linalg::dot(A[i], r.x) == b[i]);
      // strong duality
      CHECK(linalg::dot(r.y, b) == r.value);
    } else {
      // Farkas: y.A <= 0 and y.b > 0
      for (std::size_t j = 0; j < c.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < A.size(); ++i) s += r.y[i] * A[i][j];
        CHECK(s <= 0);
      }
      CHECK(linalg::dot(r.y, b) > 0);
    }
  }
}

TEST_CASE("containment verdicts carry checkable certificates") {
  for (int t = 0; t < 80; ++t) {
    std::vector<RatVec> P;
    std::size_t k = std::size_t(uniform(1, 6));
    for (std::size_t i = 0; i < k; ++i) P.push_back({Rational(uniform(-4, 4)), Rational(uniform(-4, 4))});
    RatVec target{frac(uniform(-8, 8), 2), frac(uniform(-8, 8), 2)};
    auto v = classify_containment(P, target);
    CHECK(verify_containment(v, P, target));
    // independent oracle: distance zero iff contained
    Rational d = brute_force_distance(P, target);
    CHECK((d == 0) == (v.status != Containment::outside));
  }
}

TEST_CASE("interior versus boundary in the plane") {
  std::vector<RatVec> sq4{rats({0, 0}), rats({2, 0}), rats({0, 2}), rats({2, 2})};
  CHECK(classify_containment(sq4, rats({1, 1})).status == Containment::full_dim_interior);
  CHECK(classify_containment(sq4, rats({1, 0})).status == Containment::on_boundary_or_degenerate);
  CHECK(classify_containment(sq4, rats({3, 0})).status == Containment::outside);
  std::vector<RatVec> seg{rats({0, 0}), rats({2, 2})};
  CHECK(classify_containment(seg, rats({1, 1})).status == Containment::on_boundary_or_degenerate);
}

TEST_CASE("proximum agrees with brute force projection") {
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 2 + std::size_t(t % 2);
    std::vector<RatVec> P;
    std::size_t k = std::size_t(uniform(1, 6));
    for (std::size_t i = 0; i < k; ++i) {
      RatVec p;
      for (std::size_t c = 0; c < d; ++c) p.push_back(uniform(-5, 5));
      P.push_back(p);
    }
    RatVec target;
    for (std::size_t c = 0; c < d; ++c) target.push_back(frac(uniform(-12, 12), 2));
    if (classify_containment(P, target).status == Containment::full_dim_interior) {
      CHECK_THROWS_AS(proximum(P, target), Error);
      continue;
    }
    auto px = proximum(P, target);
    CHECK(px.kkt_verified);
    CHECK(verify_proximum(px, P, target));
    CHECK(sq(px.point, target) == brute_force_distance(P, target));
  }
}

TEST_CASE("cuspidal cubic proximum is the Euclidean projection") {
  Ideal I = fixture("cuspidal_cubic");
  auto S = state_polytope(I, 3, Convention::inside);
  REQUIRE(S.complete);
  auto px = proximum(S.vertices, barycenter(I, 3, Convention::inside));
  CHECK(px.point == RatVec{Rational(9, 7), Rational(15, 14), Rational(9, 14)});
  CHECK(px.direction == std::vector<Integer>{4, 1, -5});
}

TEST_CASE("inside and outside conventions give the same verdicts") {
  for (const char* name : {"twisted_cubic", "two_points_p2", "cuspidal_cubic"}) {
    Ideal I = fixture(name);
    for (unsigned m = 2; m <= 4; ++m) {
      auto in = state_polytope(I, m, Convention::inside), out = state_polytope(I, m, Convention::outside);
      auto a = classify_containment(in.vertices, barycenter(I, m, Convention::inside));
      auto b = classify_containment(out.vertices, barycenter(I, m, Convention::outside));
      CHECK(a.status == b.status);
      CHECK(a.affine_dimension == b.affine_dimension);
      std::vector<Character> moved;
      for (const auto& v : in.vertices) moved.push_back(convert_convention(v, I.ring.size()));
      std::sort(moved.begin(), moved.end());
      CHECK(moved == out.vertices);
    }
  }
}

TEST_CASE("Pluecker brute force matches initial-ideal characters") {
  // maximizing <w, chi_A> over nonzero Pluecker coordinates gives in_w(I)_m
  std::vector<std::pair<Ideal, unsigned>> cases{{fixture("two_points_p2"), 2}};
  for (int t = 0; t < 6; ++t) cases.push_back({random_homogeneous_ideal(3, 2, 1 + t % 3, 3), 2});
  for (int t = 0; t < 4; ++t) cases.push_back({random_homogeneous_ideal(2, 3, 1 + t % 2, 3), 7});
  for (auto& [I, m] : cases) {
    auto H = hilbert_matrix(I, m);
    REQUIRE(H.columns.size() <= 8);
    auto P = pluecker_coordinates(I, m);
    for (int k = 0; k < 10; ++k) {
      Weight w = random_weight(I.ring.size(), 1000);
      std::optional<Integer> best;
      std::vector<Integer> chi_best;
      for (std::size_t s = 0; s < P.sets.size(); ++s) {
        if (P.coords[s] == 0) continue;
        std::vector<Integer> chi(I.ring.size(), 0);
        for (auto c : P.sets[s])
          for (std::size_t i = 0; i < I.ring.size(); ++i) chi[i] += H.columns[c][i];
        Integer val = 0;
        for (std::size_t i = 0; i < w.size(); ++i) val += Integer(w[i]) * chi[i];
        if (!best || val > *best) best = val, chi_best = chi;
      }
      auto ch = degree_state(I, w, m, Convention::inside);
      if (best) CHECK(ch.coords == chi_best);
    }
  }
}

TEST_CASE("two points Pluecker vector") {
  auto P = pluecker_coordinates(fixture("two_points_p2"), 2);
  REQUIRE(P.coords.size() == 15);
  // reference values, indexed by the omitted pair of columns in lex order
  std::vector<Integer> printed{45, -95, 99, -154, 209, 55, -18, 38, -13, -83, 108, -228, 22, 55, -132};
  std::map<std::pair<std::size_t, std::size_t>, Integer> by_omitted;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) by_omitted[{i, j}] = printed[k++];
  for (std::size_t s = 0; s < P.sets.size(); ++s) {
    std::vector<std::size_t> omitted;
    for (std::size_t c = 0; c < 6; ++c)
      if (std::find(P.sets[s].begin(), P.sets[s].end(), c) == P.sets[s].end()) omitted.push_back(c);
    REQUIRE(omitted.size() == 2);
    // one overall sign separates the two normalizations
    CHECK(P.coords[s] == -by_omitted[{omitted[0], omitted[1]}]);
  }
}

TEST_CASE("barycenter in both conventions") {
  Ideal I = fixture("twisted_cubic");
  auto in = barycenter(I, 2, Convention::inside);
  // Q(2) = 3, m Q / (N+1) = 6/4
  CHECK(in.coords == RatVec(4, Rational(3, 2)));
  auto out = barycenter(I, 2, Convention::outside);
  // P(2) = 7, m P / (N+1) = 14/4
  CHECK(out.coords == RatVec(4, Rational(7, 2)));
}
