#include "hilbstab/state.hpp"

#include "hilbstab/lp.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <set>

namespace hs {

Convention parse_convention(std::string_view s) {
  if (s == "inside") return Convention::inside;
  if (s == "outside") return Convention::outside;
  throw Error("unknown convention '" + std::string(s) + "' (expected inside or outside)");
}

const char* convention_name(Convention c) {
  return c == Convention::inside ? "inside" : "outside";
}

const char* containment_name(Containment c) {
  switch (c) {
    case Containment::outside: return "outside";
    case Containment::on_boundary_or_degenerate: return "on_boundary_or_degenerate";
    case Containment::full_dim_interior: return "full_dim_interior";
  }
  return "?";
}

RatVec Character::rational() const {
  RatVec v;
  v.reserve(coords.size());
  for (const auto& x : coords) v.emplace_back(x);
  return v;
}

Integer sigma_coordinate(std::size_t nvars, unsigned m) {
  if (nvars == 0) return 0;
  return binomial(m + nvars - 1, nvars);
}

Character degree_state(const MonomialIdeal& J, unsigned m, Convention c) {
  Character ch;
  ch.m = m;
  ch.convention = Convention::outside;
  ch.coords = J.standard_exponent_sum(m);
  if (c == Convention::inside) ch = convert_convention(ch, J.nvars());
  return ch;
}

Character degree_state(const Ideal& I, const Weight& w, unsigned m, Convention c, Tiebreak tb,
                       bool* tiebreak_consulted) {
  GBOptions opts;
  if (I.is_homogeneous()) opts.max_degree = int(m);
  auto r = initial_ideal(I, w, tb, opts);
  if (tiebreak_consulted) *tiebreak_consulted = r.tiebreak_consulted;
  return degree_state(r.ideal, m, c);
}

Character convert_convention(const Character& c, std::size_t nvars) {
  if (c.coords.size() != nvars) throw Error("character length mismatch");
  Character out = c;
  Integer s = sigma_coordinate(nvars, c.m);
  for (auto& x : out.coords) x = s - x;
  out.convention = c.convention == Convention::inside ? Convention::outside : Convention::inside;
  return out;
}

Barycenter convert_convention(const Barycenter& b, std::size_t nvars) {
  if (b.coords.size() != nvars) throw Error("barycenter length mismatch");
  Barycenter out = b;
  Rational s(sigma_coordinate(nvars, b.m));
  for (auto& x : out.coords) x = s - x;
  out.convention = b.convention == Convention::inside ? Convention::outside : Convention::inside;
  return out;
}

Barycenter barycenter_from_hilbert(const HilbertData& h, std::size_t nvars, Convention c) {
  Barycenter b;
  b.m = h.m;
  b.convention = c;
  Rational v(Integer(h.m) * (c == Convention::inside ? h.Q_hat : h.P_hat), Integer(nvars));
  v.canonicalize();
  b.coords.assign(nvars, v);
  return b;
}

Barycenter barycenter(const Ideal& I, unsigned m, Convention c) {
  return barycenter_from_hilbert(truncated_hilbert(I, m), I.ring.size(), c);
}

// ---------------------------------------------------------------- containment

namespace {

void check_shapes(const std::vector<RatVec>& points, const RatVec& target) {
  if (points.empty()) throw Error("containment needs at least one point");
  for (const auto& p : points)
    if (p.size() != target.size()) throw Error("point and target dimensions differ");
}

std::vector<RatVec> to_rational(const std::vector<Character>& pts) {
  std::vector<RatVec> out;
  out.reserve(pts.size());
  for (const auto& c : pts) out.push_back(c.rational());
  return out;
}

// Characters of one degree share their coordinate sum, so they live in a
// hyperplane; general point sets use the whole space.
int ambient_dimension(const std::vector<RatVec>& points, const RatVec& target) {
  auto sum = [](const RatVec& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
  };
  const Rational t = sum(target);
  for (const auto& p : points)
    if (sum(p) != t) return int(target.size());
  return int(target.size()) - 1;
}

void check_characters(const std::vector<Character>& pts, const Barycenter& t) {
  for (const auto& c : pts)
    if (c.m != t.m || c.convention != t.convention)
      throw Error("characters and barycenter must share degree and convention");
}

}  // namespace

ContainmentVerdict classify_containment(const std::vector<RatVec>& points, const RatVec& target) {
  check_shapes(points, target);
  const std::size_t n = target.size(), k = points.size();
  ContainmentVerdict v;
  v.ambient_dimension = ambient_dimension(points, target);

  std::vector<RatVec> A(n + 1, RatVec(k + 1, 0));
  RatVec b(target);
  b.push_back(1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      A[i][j] = points[j][i];
      A[i][k] += points[j][i];
    }
    A[n][j] = 1;
  }
  A[n][k] = Rational(k);
  // maximise the common slack s in lambda_j = mu_j + s
  RatVec c(k + 1, 0);
  c[k] = -1;
  auto r = solve_lp(A, b, c);
  if (r.status == LPStatus::infeasible) {
    v.status = Containment::outside;
    RatVec s(r.y.begin(), r.y.begin() + n);
    v.separating = linalg::primitive(s);
    v.affine_dimension = linalg::affine_dimension(points);
    if (!verify_containment(v, points, target))
      throw Error("separating functional failed verification");
    return v;
  }
  if (r.status != LPStatus::optimal) throw Error("containment LP unbounded");
  const Rational& s = r.x[k];
  v.multipliers.resize(k);
  for (std::size_t j = 0; j < k; ++j) v.multipliers[j] = r.x[j] + s;
  v.relative_interior = s > 0;
  v.affine_dimension = linalg::affine_dimension(points);
  v.status = v.relative_interior && v.affine_dimension >= v.ambient_dimension
                 ? Containment::full_dim_interior
                 : Containment::on_boundary_or_degenerate;
  if (!verify_containment(v, points, target))
    throw Error("convex multipliers failed verification");
  return v;
}

ContainmentVerdict classify_containment(const std::vector<Character>& points,
                                        const Barycenter& target) {
  check_characters(points, target);
  return classify_containment(to_rational(points), target.coords);
}

bool verify_containment(const ContainmentVerdict& v, const std::vector<RatVec>& points,
                        const RatVec& target) {
  const std::size_t n = target.size();
  if (v.affine_dimension != linalg::affine_dimension(points)) return false;
  if (v.ambient_dimension != ambient_dimension(points, target)) return false;
  if (v.status == Containment::outside) {
    if (v.separating.size() != n) return false;
    RatVec s(v.separating.begin(), v.separating.end());
    Rational st = linalg::dot(s, target);
    for (const auto& p : points)
      if (linalg::dot(s, p) >= st) return false;
    return true;
  }
  if (v.multipliers.size() != points.size()) return false;
  Rational total = 0;
  RatVec acc(n, 0);
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& l = v.multipliers[j];
    if (l < 0 || (v.relative_interior && l == 0)) return false;
    total += l;
    for (std::size_t i = 0; i < n; ++i) acc[i] += l * points[j][i];
  }
  if (total != 1 || acc != target) return false;
  bool full = v.relative_interior && v.affine_dimension >= v.ambient_dimension;
  return full == (v.status == Containment::full_dim_interior);
}

// ---------------------------------------------------------------- proximum

namespace {

// Minimum-norm point of the affine hull of the given vectors: weights alpha
// with sum 1 and Q alpha orthogonal to every difference of columns.
std::optional<RatVec> affine_minimizer(const std::vector<const RatVec*>& Q) {
  const std::size_t s = Q.size();
  linalg::Mat M(s + 1, RatVec(s + 1, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) M[i][j] = M[j][i] = linalg::dot(*Q[i], *Q[j]);
    M[i][s] = M[s][i] = 1;
  }
  RatVec rhs(s + 1, 0);
  rhs[s] = 1;
  auto x = linalg::solve(std::move(M), std::move(rhs));
  if (!x) return std::nullopt;
  x->resize(s);
  return x;
}

}  // namespace

Proximum proximum(const std::vector<RatVec>& points, const RatVec& target) {
  check_shapes(points, target);
  const std::size_t n = target.size(), k = points.size();
  std::vector<RatVec> q(k, RatVec(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) q[j][i] = points[j][i] - target[i];

  // Wolfe's minimum-norm-point iteration, in exact arithmetic
  std::size_t j0 = 0;
  Rational best = linalg::dot(q[0], q[0]);
  for (std::size_t j = 1; j < k; ++j) {
    Rational v = linalg::dot(q[j], q[j]);
    if (v < best) best = v, j0 = j;
  }
  std::vector<std::size_t> S{j0};
  RatVec lambda{1};
  RatVec x = q[j0];
  auto combine = [&] {
    RatVec y(n, 0);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t i = 0; i < n; ++i) y[i] += lambda[a] * q[S[a]][i];
    return y;
  };
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 100000) throw Error("proximum iteration did not settle");
    Rational xx = linalg::dot(x, x);
    if (xx == 0) break;
    std::size_t jmin = k;
    Rational vmin;
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = linalg::dot(x, q[j]);
      if (jmin == k || v < vmin) vmin = v, jmin = j;
    }
    if (vmin >= xx) break;
    if (std::find(S.begin(), S.end(), jmin) != S.end()) throw Error("proximum iteration stalled");
    S.push_back(jmin);
    lambda.push_back(0);
    while (true) {
      std::vector<const RatVec*> Q;
      for (auto j : S) Q.push_back(&q[j]);
      auto alpha = affine_minimizer(Q);
      if (!alpha) throw Error("proximum iteration lost affine independence");
      bool positive = std::all_of(alpha->begin(), alpha->end(), [](const Rational& a) { return a > 0; });
      if (positive) {
        lambda = *alpha;
        x = combine();
        break;
      }
      Rational theta = 1;
      for (std::size_t a = 0; a < S.size(); ++a)
        if ((*alpha)[a] <= 0) {
          Rational t = lambda[a] / (lambda[a] - (*alpha)[a]);
          if (t < theta) theta = t;
        }
      for (std::size_t a = 0; a < S.size(); ++a) lambda[a] = theta * (*alpha)[a] + (1 - theta) * lambda[a];
      std::vector<std::size_t> S2;
      RatVec l2;
      for (std::size_t a = 0; a < S.size(); ++a)
        if (lambda[a] > 0) S2.push_back(S[a]), l2.push_back(lambda[a]);
      S = std::move(S2);
      lambda = std::move(l2);
      x = combine();
    }
  }

  Proximum p;
  p.point.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.point[i] = x[i] + target[i];
  bool zero = std::all_of(x.begin(), x.end(), [](const Rational& a) { return a == 0; });
  if (zero) {
    auto v = classify_containment(points, target);
    if (v.status == Containment::full_dim_interior)
      throw Error("proximum undefined, point is interior");
  }
  p.direction = linalg::primitive(x);
  std::vector<std::pair<std::size_t, Rational>> sup;
  for (std::size_t a = 0; a < S.size(); ++a) sup.push_back({S[a], lambda[a]});
  std::sort(sup.begin(), sup.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [j, l] : sup) p.support.push_back(j), p.weights.push_back(l);
  for (std::size_t j = 0; j < k; ++j) {
    RatVec diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = points[j][i] - p.point[i];
    Rational g = linalg::dot(x, diff);
    if (j == 0 || g < p.min_gap) p.min_gap = g;
  }
  p.kkt_verified = verify_proximum(p, points, target);
  if (!p.kkt_verified) throw Error("proximum failed its optimality check");
  return p;
}

Proximum proximum(const std::vector<Character>& points, const Barycenter& target) {
  check_characters(points, target);
  return proximum(to_rational(points), target.coords);
}

bool verify_proximum(const Proximum& p, const std::vector<RatVec>& points, const RatVec& target) {
  const std::size_t n = target.size();
  if (p.point.size() != n || p.support.size() != p.weights.size()) return false;
  Rational total = 0;
  RatVec acc(n, 0);
  for (std::size_t a = 0; a < p.support.size(); ++a) {
    if (p.support[a] >= points.size() || p.weights[a] < 0) return false;
    total += p.weights[a];
    for (std::size_t i = 0; i < n; ++i) acc[i] += p.weights[a] * points[p.support[a]][i];
  }
  if (total != 1 || acc != p.point) return false;
  RatVec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = p.point[i] - target[i];
  if (linalg::primitive(d) != p.direction) return false;
  bool first = true;
  Rational gap;
  for (const auto& qv : points) {
    RatVec diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = qv[i] - p.point[i];
    Rational g = linalg::dot(d, diff);
    if (first || g < gap) gap = g, first = false;
  }
  return gap >= 0 && gap == p.min_gap;
}

// ---------------------------------------------------------------- Hilbert matrix

HilbertMatrix hilbert_matrix(const Ideal& I, unsigned m) {
  auto s = degree_slice(I, m, TermOrder(Tiebreak::lex));
  return {std::move(s.columns), std::move(s.rows)};
}

PlueckerPoint pluecker_coordinates(const Ideal& I, unsigned m, std::uint64_t budget) {
  auto H = hilbert_matrix(I, m);
  const std::size_t R = H.columns.size(), Q = H.rows.size();
  Integer count = binomial(R, Q);
  if (count > Integer(std::to_string(budget))) throw BudgetExceeded("Pluecker set count exceeds budget");
  PlueckerPoint out;
  std::vector<std::size_t> c(Q);
  for (std::size_t i = 0; i < Q; ++i) c[i] = i;
  std::vector<Rational> raw;
  while (true) {
    linalg::Mat sub(Q, RatVec(Q));
    for (std::size_t r = 0; r < Q; ++r)
      for (std::size_t k = 0; k < Q; ++k) sub[r][k] = H.rows[r][c[k]];
    raw.push_back(Q == 0 ? Rational(1) : linalg::determinant(std::move(sub)));
    out.sets.push_back(c);
    // next subset in colex order
    std::size_t i = 0;
    while (i < Q && c[i] + 1 == (i + 1 < Q ? c[i + 1] : R)) ++i;
    if (i == Q) break;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = j;
  }
  out.coords = linalg::primitive(raw);
  for (const auto& x : out.coords)
    if (x != 0) {
      if (x < 0)
        for (auto& y : out.coords) y = -y;
      break;
    }
  return out;
}

// ---------------------------------------------------------------- state polytopes

StatePolytope state_polytope(const Ideal& I, unsigned m, Convention c, const FanOptions& opts) {
  FanOptions o = opts;
  o.degree = int(m);
  auto F = enumerate_initial_ideals(I, o);
  StatePolytope P;
  std::set<Character> seen;
  for (const auto& cone : F.cones) seen.insert(degree_state(cone.initial, m, c));
  P.vertices.assign(seen.begin(), seen.end());
  P.complete = F.complete;
  P.stop_reason = F.stop_reason;
  P.cones = F.cones.size();
  return P;
}

StatePolytope state_polytope(const FanEnumeration& F, unsigned m, Convention c) {
  StatePolytope P;
  std::set<Character> seen;
  for (const auto& cone : F.cones) seen.insert(degree_state(cone.initial, m, c));
  P.vertices.assign(seen.begin(), seen.end());
  P.complete = F.complete;
  P.stop_reason = F.stop_reason;
  P.cones = F.cones.size();
  return P;
}

}  // namespace hs
