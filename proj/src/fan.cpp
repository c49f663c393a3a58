#include "hilbstab/fan.hpp"

#include "gb_engine.hpp"
#include "hilbstab/lp.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace hs {
namespace {

using linalg::Vec;

IntVec primitive_int(std::vector<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVec to_int64(const std::vector<Integer>& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw Error("weight does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

// Rows of the tiebreak as weight vectors; on homogeneous comparisons the
// order is the lexicographic refinement of these rows.
std::vector<Weight> tiebreak_rows(Tiebreak tb, std::size_t n) {
  std::vector<Weight> rows;
  if (tb == Tiebreak::lex) {
    for (std::size_t i = 0; i < n; ++i) {
      Weight r(n, 0);
      r[i] = 1;
      rows.push_back(r);
    }
  } else {
    rows.push_back(Weight(n, 1));
    for (std::size_t i = n; i-- > 0;) {
      Weight r(n, 0);
      r[i] = -1;
      rows.push_back(r);
    }
  }
  return rows;
}

Integer dot_z(const std::vector<Integer>& w, const IntVec& u) {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i];
  return s;
}

// A weight strictly positive on every inequality, built from the order's
// rows: w = sum M^(k-1-i) row_i for growing M.
std::optional<std::vector<Integer>> interior_seed(const std::vector<IntVec>& U,
                                                  const TermOrder& order, std::size_t n) {
  std::vector<Weight> rows = order.rows();
  for (auto& r : tiebreak_rows(order.tiebreak(), n)) rows.push_back(r);
  Integer bound = 0;
  for (const auto& u : U) {
    bool decided = false;
    for (const auto& r : rows) {
      Integer v = 0;
      for (std::size_t i = 0; i < n; ++i) v += Integer(r[i]) * u[i];
      if (abs(v) > bound) bound = abs(v);
      if (v != 0 && !decided) {
        if (v < 0) return std::nullopt;
        decided = true;
      }
    }
    if (!decided) return std::nullopt;
  }
  auto build = [&](const Integer& M) {
    std::vector<Integer> w(n, 0);
    Integer scale = 1;
    for (std::size_t k = rows.size(); k-- > 0;) {
      for (std::size_t i = 0; i < n; ++i) w[i] += scale * rows[k][i];
      scale *= M;
    }
    return w;
  };
  auto ok = [&](const std::vector<Integer>& w) {
    for (const auto& u : U)
      if (dot_z(w, u) <= 0) return false;
    return true;
  };
  for (Integer M = 2; M < bound + 2; M *= 2) {
    auto w = build(M);
    if (ok(w)) return w;
  }
  auto w = build(bound + 2);
  if (!ok(w)) return std::nullopt;
  return w;
}

// Irredundant generators of the dual description: the extreme rays of
// cone(U), found incrementally. Every candidate is tested against the known
// extreme set; a Farkas certificate of non-membership gives a linear
// functional whose maximiser over all points is a new extreme ray.
std::vector<std::size_t> extreme_rays(const std::vector<IntVec>& U,
                                      const std::vector<Integer>& w0) {
  const std::size_t n = w0.size();
  std::vector<Vec> P;
  for (const auto& u : U) {
    Rational s = Rational(dot_z(w0, u));
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(u[i]) / s;
    P.push_back(std::move(p));
  }
  std::vector<std::size_t> E;
  std::vector<bool> in_E(U.size(), false);
  for (std::size_t c = 0; c < U.size(); ++c) {
    while (!in_E[c]) {
      std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(E.size()));
      for (std::size_t k = 0; k < E.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) A[i][k] = P[E[k]][i];
        A[n][k] = 1;
      }
      Vec b(P[c]);
      b.push_back(1);
      Vec y;
      if (E.empty()) {
        y.assign(n + 1, 0);
        y[n] = 1;
      } else {
        auto r = solve_lp(A, b, Vec(E.size(), 0));
        if (r.status != LPStatus::infeasible) break;
        y = r.y;
      }
      auto h = [&](const Vec& p) {
        Rational s = y[n];
        for (std::size_t i = 0; i < n; ++i) s += y[i] * p[i];
        return s;
      };
      std::size_t best = U.size();
      Rational hb;
      for (std::size_t k = 0; k < U.size(); ++k) {
        Rational v = h(P[k]);
        if (best == U.size() || v > hb || (v == hb && P[k] > P[best])) {
          best = k;
          hb = v;
        }
      }
      if (hb <= 0 || in_E[best]) throw Error("facet search lost its certificate");
      E.push_back(best);
      in_E[best] = true;
    }
  }
  std::sort(E.begin(), E.end());
  return E;
}

// minimise |w|_1 with <w, f> = 0 for f in `zero` and <w, f> >= 1 for f in `pos`
std::optional<Vec> small_point(const std::vector<IntVec>& zero, const std::vector<IntVec>& pos,
                               std::size_t n) {
  const std::size_t cols = 2 * n + pos.size();
  std::vector<std::vector<Rational>> A;
  Vec b;
  for (const auto& f : zero) {
    std::vector<Rational> row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = f[i], row[n + i] = -f[i];
    A.push_back(std::move(row));
    b.push_back(0);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    std::vector<Rational> row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = pos[k][i], row[n + i] = -pos[k][i];
    row[2 * n + k] = -1;
    A.push_back(std::move(row));
    b.push_back(1);
  }
  Vec c(cols, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) c[i] = 1;
  auto r = solve_lp(A, b, c);
  if (r.status != LPStatus::optimal) return std::nullopt;
  Vec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = r.x[i] - r.x[n + i];
  return w;
}

bool strictly_inside(const Weight& w, const std::vector<IntVec>& ineq) {
  for (const auto& u : ineq) {
    __int128 s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += __int128(w[i]) * u[i];
    if (s <= 0) return false;
  }
  return true;
}

MonomialIdeal key_of(const MarkedGroebnerBasis& G) { return MonomialIdeal(G.ring, G.marks); }

}  // namespace

MarkedGroebnerBasis degree_marked_basis(const Ideal& I, unsigned m, const TermOrder& order) {
  auto s = degree_slice(I, m, order);
  MarkedGroebnerBasis G;
  G.ring = I.ring;
  G.order = order;
  G.reduced = true;
  G.truncated_at = int(m);
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < s.columns.size(); ++k)
      if (s.rows[r][k] != 0) {
        ts.push_back({s.columns[k], s.rows[r][k]});
        if (k != s.pivots[r] && order.weight_tie(s.columns[k], s.columns[s.pivots[r]]))
          G.tiebreak_consulted = true;
      }
    G.marks.push_back(s.columns[s.pivots[r]]);
    G.elements.emplace_back(I.ring.size(), std::move(ts));
  }
  return G;
}

GroebnerCone groebner_cone(const MarkedGroebnerBasis& G, bool with_facet_points) {
  const std::size_t n = G.ring.size();
  GroebnerCone C;
  C.basis = G;
  C.initial = key_of(G);
  std::set<IntVec> seen;
  for (std::size_t k = 0; k < G.size(); ++k) {
    for (const auto& t : G.elements[k].terms()) {
      if (t.m == G.marks[k]) continue;
      IntVec u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = std::int64_t(G.marks[k][i]) - std::int64_t(t.m[i]);
      u = primitive_int(std::move(u));
      if (seen.insert(u).second) C.inequalities.push_back(u);
    }
  }
  if (C.inequalities.empty()) {
    C.witness = Weight(n, 0);
    return C;
  }
  auto w0 = interior_seed(C.inequalities, G.order, n);
  if (!w0) {
    C.degenerate = true;
    return C;
  }
  for (auto k : extreme_rays(C.inequalities, *w0)) C.facets.push_back(C.inequalities[k]);
  auto w = small_point({}, C.facets, n);
  if (!w) throw Error("interior point LP failed on a full-dimensional cone");
  C.witness = to_int64(linalg::primitive(*w));
  if (!strictly_inside(C.witness, C.inequalities)) throw Error("cone witness failed verification");
  if (with_facet_points) {
    for (std::size_t j = 0; j < C.facets.size(); ++j) {
      std::vector<IntVec> others;
      for (std::size_t k = 0; k < C.facets.size(); ++k)
        if (k != j) others.push_back(C.facets[k]);
      auto p = small_point({C.facets[j]}, others, n);
      if (!p) throw Error("facet point LP failed");
      C.facet_points.push_back(to_int64(linalg::primitive(*p)));
    }
  }
  return C;
}

GroebnerCone flip(const GroebnerCone& C, std::size_t j, const GBOptions& opts) {
  if (j >= C.facet_points.size()) throw Error("flip needs facet points");
  const auto& G = C.basis;
  const Weight& omega = C.facet_points[j];
  Weight neg(C.facets[j].size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -C.facets[j][i];
  TermOrder next({omega, neg}, G.order.tiebreak());
  if (C.degree >= 0) {
    // re-echelon the same space under the new order
    auto D = groebner_cone(degree_marked_basis(G.ideal(), unsigned(C.degree), next), true);
    D.degree = C.degree;
    return D;
  }
  auto H = initial_forms(G, omega);
  auto Hn = buchberger(H, next, opts);
  std::vector<detail::OPoly> lifted;
  for (const auto& h : Hn.elements) {
    auto f = h - normal_form(h, G);
    lifted.push_back(detail::to_ordered(f, next));
  }
  auto red = detail::interreduce(std::move(lifted), next);
  auto B = detail::package(G.ring, next, std::move(red), -1);
  if (MonomialIdeal(G.ring, B.marks) != MonomialIdeal(G.ring, Hn.marks))
    throw Error("lifted basis lost its initial ideal");
  return groebner_cone(B, true);
}

FanEnumeration enumerate_initial_ideals(const Ideal& I, const FanOptions& opts) {
  if (!I.is_homogeneous()) throw Error("fan enumeration needs a homogeneous ideal");
  const auto start_time = Clock::now();
  GBOptions gbo;
  if (opts.max_seconds > 0)
    gbo.deadline = start_time + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opts.max_seconds));
  FanEnumeration out;
  out.ring = I.ring;
  out.degree = opts.degree;

  TermOrder first = opts.start ? TermOrder(*opts.start, opts.tiebreak) : TermOrder(opts.tiebreak);
  MarkedGroebnerBasis G0;
  try {
    G0 = opts.degree >= 0 ? degree_marked_basis(I, unsigned(opts.degree), first)
                          : buchberger(I, first, gbo);
  } catch (const BudgetExceeded&) {
    out.complete = false;
    out.stop_reason = "time budget exhausted";
    return out;
  }
  std::map<MonomialIdeal, std::size_t> index;
  std::vector<GroebnerCone> cones;
  cones.push_back(groebner_cone(G0, true));
  cones.back().degree = opts.degree;
  index[cones.back().initial] = 0;
  std::vector<std::size_t> level{0};

  const unsigned workers = std::max(1u, opts.workers);
  auto run_parallel = [&](std::size_t count, const std::function<void(std::size_t)>& job) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
      while (!failed) {
        std::size_t k = next++;
        if (k >= count) return;
        try {
          job(k);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
          failed = true;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(workers, count); ++t) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  };

  try {
    while (!level.empty()) {
      std::vector<std::pair<std::size_t, std::size_t>> tasks;
      for (auto c : level)
        for (std::size_t j = 0; j < cones[c].facets.size(); ++j) tasks.push_back({c, j});
      std::vector<std::optional<GroebnerCone>> found(tasks.size());
      run_parallel(tasks.size(), [&](std::size_t k) {
        found[k] = flip(cones[tasks[k].first], tasks[k].second, gbo);
      });
      std::vector<std::size_t> next_level;
      for (auto& f : found) {
        if (index.count(f->initial)) continue;
        if (opts.max_cones && cones.size() >= opts.max_cones) {
          out.complete = false;
          out.stop_reason = "cone budget exhausted";
          break;
        }
        index[f->initial] = cones.size();
        next_level.push_back(cones.size());
        cones.push_back(std::move(*f));
      }
      if (!out.complete) break;
      if (gbo.deadline && Clock::now() > *gbo.deadline && !next_level.empty()) {
        out.complete = false;
        out.stop_reason = "time budget exhausted";
        break;
      }
      level = std::move(next_level);
    }
  } catch (const BudgetExceeded&) {
    out.complete = false;
    out.stop_reason = "time budget exhausted";
  }
  std::sort(cones.begin(), cones.end(),
            [](const GroebnerCone& a, const GroebnerCone& b) { return a.initial < b.initial; });
  out.cones = std::move(cones);
  return out;
}

WeightStream::WeightStream(std::uint64_t seed, std::int64_t lo, std::int64_t hi)
    : rng_(seed), lo_(lo), hi_(hi) {
  if (hi < lo) throw Error("empty weight range");
}

Weight WeightStream::next(std::size_t dim) {
  const auto span = std::uint64_t(hi_ - lo_) + 1;
  if (span < dim) throw Error("weight range too small for distinct coordinates");
  Weight w;
  std::set<std::int64_t> used;
  while (w.size() < dim) {
    std::int64_t v = lo_ + std::int64_t(rng_() % span);
    if (used.insert(v).second) w.push_back(v);
  }
  return w;
}

Weight random_generic_weight(std::size_t dim, std::uint64_t seed, std::int64_t lo,
                             std::int64_t hi) {
  return WeightStream(seed, lo, hi).next(dim);
}

}  // namespace hs
