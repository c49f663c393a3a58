// Acceptance run: one PASS/FAIL line per criterion, indented lines for the
// individual checks.
//
// Exit status: 0 when every failing check is listed in kKnownFailures,
// 1 otherwise. Known failures still print FAIL.

#include "hilbstab/curves.hpp"
#include "hilbstab/reps.hpp"
#include "hilbstab/stability.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace hs;

namespace {

// Checks that fail for reasons recorded in the decisions ledger. The stored
// diagonalized elliptic-bridge list is not a coordinate relabeling of the
// plus/minus transform: the dimensions of {l : v l in I_2} per coordinate
// differ (4,4,4,4,7 x 8 against 0,0,2 x 8,8,8).
const std::set<std::string> kKnownFailures = {"7c"};

struct Check {
  std::string id, text;
  bool ok = false;
  std::string detail;
};

class Run {
 public:
  void begin(int n, std::string title) {
    criterion_ = n;
    title_ = std::move(title);
    checks_.clear();
    start_ = std::chrono::steady_clock::now();
  }

  void check(const std::string& id, const std::string& text, bool ok, const std::string& detail = "") {
    checks_.push_back({id, text, ok, detail});
    std::cout << "    " << (ok ? "ok  " : "FAIL") << " " << id << "  " << text;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) (kKnownFailures.count(id) ? known_ : unexpected_).push_back(id);
  }

  // runs a check body, turning exceptions into failures
  template <class F>
  void guarded(const std::string& id, const std::string& text, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(id, text, false, std::string("exception: ") + e.what());
    }
  }

  void end() {
    bool ok = std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok; });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion_ << ": " << title_ << " (" << t.str()
              << " s)" << std::endl
              << std::endl;
    (ok ? passed_ : failed_)++;
  }

  int finish() const {
    std::cout << "summary: " << passed_ << " criteria passed, " << failed_ << " failed";
    if (!known_.empty()) {
      std::cout << "; documented failures:";
      for (const auto& id : known_) std::cout << " " << id;
    }
    if (!unexpected_.empty()) {
      std::cout << "; unexpected failures:";
      for (const auto& id : unexpected_) std::cout << " " << id;
    }
    std::cout << std::endl;
    return unexpected_.empty() ? 0 : 1;
  }

 private:
  int criterion_ = 0;
  std::string title_;
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_;
  int passed_ = 0, failed_ = 0;
  std::vector<std::string> known_, unexpected_;
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::string join(const RatVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

Weight repeat(std::initializer_list<std::pair<std::int64_t, std::size_t>> runs) {
  Weight w;
  for (auto [v, n] : runs) w.insert(w.end(), n, v);
  return w;
}

MonomialIdeal monomials(const std::string& text, const Ring& R) {
  std::vector<Monomial> g;
  for (const auto& p : parse_ideal(text, R).generators) g.push_back(p.terms().front().m);
  return MonomialIdeal(R, g);
}

// Every containment verdict in the run passes through here and has its
// certificate re-checked; the tally feeds criterion 9(c).
struct VerdictLedger {
  std::size_t checked = 0, failed = 0;

  ContainmentVerdict classify(const std::vector<RatVec>& points, const RatVec& target) {
    auto v = classify_containment(points, target);
    ++checked;
    if (!verify_containment(v, points, target)) ++failed;
    return v;
  }
  ContainmentVerdict classify(const std::vector<Character>& points, const Barycenter& target) {
    std::vector<RatVec> P;
    for (const auto& c : points) P.push_back(c.rational());
    return classify(P, target.coords);
  }
} ledger;

// mu values at the listed degrees and the parabola through the first two
std::vector<Integer> mu_values(const Ideal& I, const Weight& w, std::initializer_list<unsigned> ms) {
  std::vector<Integer> out;
  for (auto m : ms) out.push_back(mu(I, w, m).value);
  return out;
}

MuPolynomial fit(const std::vector<Integer>& v, unsigned m1, unsigned m2) {
  return parabola_fit({Rational(m1), Rational(v[0])}, {Rational(m2), Rational(v[1])});
}

// Monte Carlo plus an independent replay of the weights it kept
void monte_carlo_line(Run& run, const std::string& id, const std::string& what, const Ideal& I, unsigned m,
                      CertificateKind want, std::size_t max_weights = 0) {
  run.guarded(id, what, [&] {
    MonteCarloOptions o;
    o.seed = 20240611 + m;
    o.workers = std::max(1u, std::thread::hardware_concurrency());
    if (max_weights) o.max_rounds = max_weights / (4 * I.ring.size() + o.guided_steps);
    auto cert = monte_carlo_check(I, m, o);
    auto replay = verify_certificate(I, m, cert.weights);
    bool certified = verify_containment(cert.verdict, [&] {
      std::vector<RatVec> P;
      for (const auto& c : cert.characters) P.push_back(c.rational());
      return P;
    }(), cert.target.coords);
    ++ledger.checked;
    if (!certified) ++ledger.failed;
    bool ok = cert.kind == want && certified && replay.verdict.status == cert.verdict.status &&
              (!max_weights || cert.weights_tried <= max_weights);
    run.check(id, what, ok,
              std::string(certificate_kind_name(cert.kind)) + ", " + str(cert.weights_tried) + " weights, " +
                  str(cert.guided_weights) + " guided, " + str(cert.characters.size()) + " characters, replay " +
                  containment_name(replay.verdict.status) + (cert.destabilizing ? ", destabilizing weight found" : ""));
  });
}

// ------------------------------------------------------------------ 1

void criterion1(Run& run) {
  run.begin(1, "Gotzmann numbers");
  const std::vector<std::tuple<int, int, int>> rows{{8, -2, 26},   {12, -3, 63},  {16, -4, 116},
                                                    {20, -5, 185}, {24, -6, 270}, {28, -7, 371}};
  for (auto [a, b, want] : rows) {
    auto got = gotzmann_number(a, b);
    run.check("1", str(a) + "t" + str(b) + " -> " + str(want), got == want, "got " + got.get_str());
  }
  run.end();
}

// ------------------------------------------------------------------ 2

void criterion2(Run& run) {
  run.begin(2, "Pluecker vector of two points in the plane at m=2");
  run.guarded("2", "15 coordinates match the reference vector up to one sign", [&] {
    auto P = pluecker_coordinates(fixture("two_points_p2"), 2);
    // reference values, indexed by the omitted pair of columns in lex order
    const std::vector<Integer> printed{45, -95, 99, -154, 209, 55, -18, 38, -13, -83, 108, -228, 22, 55, -132};
    std::map<std::pair<std::size_t, std::size_t>, Integer> by_omitted;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) by_omitted[{i, j}] = printed[k++];
    bool ok = P.coords.size() == 15;
    int sign = 0;
    for (std::size_t s = 0; ok && s < P.sets.size(); ++s) {
      std::vector<std::size_t> omitted;
      for (std::size_t c = 0; c < 6; ++c)
        if (std::find(P.sets[s].begin(), P.sets[s].end(), c) == P.sets[s].end()) omitted.push_back(c);
      const Integer& want = by_omitted[{omitted[0], omitted[1]}];
      if (!sign) sign = P.coords[s] == want ? 1 : -1;
      ok = P.coords[s] == sign * want;
    }
    Integer content = 0;
    for (const auto& c : P.coords) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    run.check("2", "15 coordinates match the reference vector up to one sign", ok && content == 1,
              "overall sign " + str(sign) + ", content " + content.get_str());
  });
  run.end();
}

// ------------------------------------------------------------------ 3

void criterion3(Run& run) {
  run.begin(3, "twisted cubic fan and states");
  run.guarded("3", "twisted cubic", [&] {
    Ideal I = fixture("twisted_cubic");
    auto F = enumerate_initial_ideals(I);
    std::set<MonomialIdeal> got, want;
    for (const auto& c : F.cones) got.insert(c.initial);
    for (const char* s : {"bd,ad,ac", "c^2,ad,ac", "c^2,bc,ac,a^2d", "c^2,bc,b^3,ac", "c^2,bc,b^2",
                          "bd,b^2,ad", "bd,bc,b^2,ad^2", "c^3,bd,bc,b^2"})
      want.insert(monomials(s, I.ring));
    run.check("3", "fan has exactly the 8 listed initial ideals", F.complete && got == want,
              str(F.cones.size()) + " cones");
    auto s2 = state_polytope(F, 2, Convention::inside).vertices.size();
    auto s3 = state_polytope(F, 3, Convention::inside).vertices.size();
    run.check("3", "6 distinct characters at m=2", s2 == 6, str(s2));
    run.check("3", "8 distinct characters at m=3", s3 == 8, str(s3));
  });
  run.end();
}

// ------------------------------------------------------------------ 4

// Outside-convention character polynomials, one row per initial ideal:
// coefficients (m^2, m, 1) per coordinate.
struct RibbonRow {
  const char* ideal;
  std::array<std::array<int, 3>, 4> xi;
};

const std::vector<RibbonRow> kRibbonTable{
    {"b^2d^2, ad^2, ac", {{{1, 0, 0}, {2, -1, -1}, {2, -4, 4}, {1, 2, -3}}}},
    {"c^4, ad^2, ac", {{{1, 0, 0}, {3, -6, 5}, {0, 6, -8}, {2, -3, 3}}}},
    {"c^3, ac, a^2d^2", {{{1, 1, -2}, {3, -6, 5}, {0, 3, -2}, {2, -1, -1}}}},
    {"c^3, b^2c^2, ac, a^3d^2", {{{1, 3, -8}, {3, -8, 11}, {0, 1, 4}, {2, 1, -7}}}},
    {"c^3, b^2c^2, b^4c, ac, a^4d^2", {{{1, 6, -20}, {3, -12, 27}, {0, 0, 8}, {2, 3, -15}}}},
    {"b^2, ad^2", {{{2, -2, 1}, {0, 3, -3}, {3, -6, 5}, {1, 2, -3}}}},
    {"bcd, b^2, abd^2, a^2d^3", {{{2, 0, -4}, {0, 1, 2}, {3, -8, 10}, {1, 4, -8}}}},
    {"bcd, bc^4, b^2, abd^2, a^2d^4", {{{2, 2, -12}, {0, 0, 6}, {3, -12, 26}, {1, 7, -20}}}},
    {"c^3, b^2", {{{3, -6, 5}, {0, 3, -3}, {0, 6, -7}, {3, -6, 5}}}},
    {"c^3, b^2c^2, b^4c, b^6, ac", {{{3, -12, 20}, {0, 15, -33}, {0, 0, 8}, {3, -6, 5}}}},
    {"c^6, bcd, bc^3, b^2, abd^3", {{{3, -7, 9}, {0, 0, 6}, {0, 15, -37}, {3, -11, 22}}}},
    {"c^5, bcd, bc^3, b^2", {{{3, -6, 5}, {0, 1, 2}, {0, 10, -17}, {3, -8, 10}}}},
};

void criterion4(Run& run) {
  run.begin(4, "genus-4 ribbon");
  run.guarded("4", "ribbon", [&] {
    Ideal I = fixture("ribbon_g4");
    auto F = enumerate_initial_ideals(I);
    std::set<MonomialIdeal> got, want;
    for (const auto& c : F.cones) got.insert(c.initial);
    for (const auto& row : kRibbonTable) want.insert(monomials(row.ideal, I.ring));
    run.check("4", "fan has exactly the 12 tabulated initial ideals", F.complete && got == want,
              str(F.cones.size()) + " cones");

    auto C = chow_state(I, F, 1, 6);
    std::size_t matched = 0;
    for (std::size_t k = 0; k < F.cones.size(); ++k) {
      const auto& poly = C.polynomials[k];  // poly[power][coordinate]
      for (const auto& row : kRibbonTable) {
        if (monomials(row.ideal, I.ring) != F.cones[k].initial) continue;
        bool same = poly.size() == 3;
        for (std::size_t c = 0; same && c < 4; ++c)
          for (std::size_t p = 0; p < 3; ++p) same = same && poly[2 - p][c] == row.xi[c][p];
        matched += same;
      }
    }
    std::string degs;
    for (auto d : C.degrees) degs += (degs.empty() ? "" : ",") + str(d);
    run.check("4", "character polynomials match all 12 table rows", matched == 12,
              str(matched) + "/12, fitted at degrees " + degs);

    const std::vector<RatVec> listed{{1, 2, 2, 1}, {1, 3, 0, 2}, {3, 0, 0, 3}, {2, 0, 3, 1}};
    std::set<RatVec> raw(C.vertices.begin(), C.vertices.end()), want_raw(listed.begin(), listed.end());
    std::set<std::vector<Integer>> norm(C.normalized.begin(), C.normalized.end()), want_norm;
    for (const auto& v : listed) {
      std::vector<Integer> z;
      Integer g = 0;
      for (const auto& x : v) z.push_back(x.get_num()), mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      for (auto& x : z) x /= g;
      want_norm.insert(z);
    }
    run.check("4", "Chow vertices (1,2,2,1) (1,3,0,2) (3,0,0,3) (2,0,3,1), also after content normalization",
              raw == want_raw && norm == want_norm, str(raw.size()) + " vertices");
    auto v = ledger.classify(C.vertices, C.barycenter);
    run.check("4", "Chow strictly semistable", v.status == Containment::on_boundary_or_degenerate,
              containment_name(v.status));

    const Weight lambda{-3, -1, 1, 3};
    std::string mus;
    bool unstable = true;
    for (unsigned m = 2; m <= 6; ++m) {
      auto value = mu(I, lambda, m).value;
      auto S = state_polytope(I, m, Convention::inside);
      auto verdict = ledger.classify(S.vertices, barycenter(I, m, Convention::inside));
      unstable = unstable && value != 0 && S.complete && verdict.status == Containment::outside;
      mus += (mus.empty() ? "" : ",") + value.get_str();
    }
    run.check("4", "Hilbert unstable at m=2..6 via lambda=(-3,-1,1,3)", unstable, "mu = " + mus);
  });
  run.end();
}

// ------------------------------------------------------------------ 5

void criterion5(Run& run) {
  run.begin(5, "bicanonical genus-3 Wiman curve");
  Ideal I = fixture("wiman_3");
  run.guarded("5", "mu", [&] {
    const Weight w{10, 10, 10, 10, 10, 12};
    auto v = mu_values(I, w, {2, 3});
    run.check("5", "mu(w=(10^5,12)) = -4, 24 at m=2,3", v == std::vector<Integer>{-4, 24},
              join(v));
    auto p = fit(v, 2, 3);
    run.check("5", "parabola 4(m-1)(4m-9)", p.A == 16 && p.B == -36, p.to_string());
  });
  monte_carlo_line(run, "5", "Monte Carlo certifies stability at m=3", I, 3, CertificateKind::stable);
  run.guarded("5", "full fan and m=2 proximum", [&] {
    FanOptions o;
    o.workers = std::max(1u, std::thread::hardware_concurrency());
    auto F = enumerate_initial_ideals(I, o);
    run.check("5", "full fan has 4615 initial ideals", F.complete && F.cones.size() == 4615,
              str(F.cones.size()) + " cones");
    auto S = state_polytope(F, 2, Convention::inside);
    auto D = state_polytope(I, 2, Convention::inside);
    run.check("5", "degree-2 vertices of the full fan equal those of the degree-2 fan",
              D.complete && S.vertices == D.vertices, str(S.vertices.size()) + " vertices");
    auto target = barycenter(I, 2, Convention::inside);
    auto verdict = ledger.classify(S.vertices, target);
    auto px = proximum(S.vertices, target);
    RatVec want_point(5, Rational(12, 5));
    want_point.push_back(2);
    std::vector<Integer> want_dir{1, 1, 1, 1, 1, -5};
    std::vector<RatVec> P;
    for (const auto& c : S.vertices) P.push_back(c.rational());
    bool ok = verdict.status == Containment::outside && px.point == want_point && px.direction == want_dir &&
              px.kkt_verified && verify_proximum(px, P, target.coords);
    run.check("5", "m=2 unstable, proximum (12/5 x5, 2), direction (1,1,1,1,1,-5), KKT verified", ok,
              "proximum " + join(px.point) + ", direction " + join(px.direction));
  });
  run.end();
}

// ------------------------------------------------------------------ 6

void criterion6(Run& run) {
  run.begin(6, "bicanonical genus-4 Wiman curve");
  Ideal I = fixture("wiman_4");
  run.guarded("6", "generators", [&] {
    Ideal built = wiman_ideal(4);
    std::set<std::string> a, b;
    for (const auto& g : built.generators) a.insert(to_string(g, built.ring));
    for (const auto& g : I.generators) b.insert(to_string(g, I.ring));
    run.check("6", "wiman_ideal(4) equals the stored generator set", a == b && built.ring.names() == I.ring.names(),
              str(a.size()) + " generators");
  });
  run.guarded("6", "mu", [&] {
    const Weight w = repeat({{-2, 7}, {7, 2}});
    auto v = mu_values(I, w, {2, 3, 4});
    run.check("6", "mu(w=(-2^7,7,7)) = 108, 648, 1620 at m=2,3,4", v == std::vector<Integer>{108, 648, 1620},
              join(v));
    auto p = fit(v, 2, 3);
    run.check("6", "parabola 108(m-1)(2m-3), consistent at m=4",
              p.A == 216 && p.B == -324 && p(4) == Rational(v[2]), p.to_string());
  });
  monte_carlo_line(run, "6", "Monte Carlo certifies stability at m=2 within 1000 weights", I, 2,
                   CertificateKind::stable, 1000);
  run.guarded("6", "whittled replay", [&] {
    auto J = whittled_initial_ideals();
    std::vector<unsigned> inside, outside;
    for (unsigned m = 2; m <= 64; ++m) {
      auto r = verify_certificate(I, m, J);
      std::vector<RatVec> P;
      for (const auto& c : r.characters) P.push_back(c.rational());
      ++ledger.checked;
      if (!verify_containment(r.verdict, P, barycenter(I, m, Convention::inside).coords)) ++ledger.failed;
      (r.verdict.status == Containment::full_dim_interior ? inside : outside).push_back(m);
    }
    bool window = true;
    for (unsigned m = 4; m <= 36; ++m) window = window && std::count(inside.begin(), inside.end(), m);
    for (unsigned m = 37; m <= 64; ++m) window = window && std::count(outside.begin(), outside.end(), m);
    run.check("6", "whittled 9-ideal set contains the barycenter for 4<=m<=36, not for 37<=m<=64", window,
              str(J.size()) + " ideals; interior at m=" + str(inside.front()) + ".." + str(inside.back()));
  });
  run.end();
}

// ------------------------------------------------------------------ 7

void criterion7(Run& run) {
  run.begin(7, "genus-5 curve with an elliptic bridge");
  Ideal I = fixture("elliptic_bridge");
  run.guarded("7a", "mu", [&] {
    const Weight w = repeat({{2, 5}, {1, 1}, {0, 1}, {2, 5}});
    auto v = mu_values(I, w, {2, 3, 4});
    auto p = fit(v, 2, 3);
    run.check("7a", "mu = -12, -24, -36 at m=2,3,4; fit -12(m-1) with zero quadratic term",
              v == std::vector<Integer>{-12, -24, -36} && p.A == 0 && p.B == -12 && p(4) == Rational(v[2]),
              join(v) + "; " + p.to_string());
  });
  run.guarded("7b", "multiplicity", [&] {
    const std::vector<DiagonalAction> D{
        make_action(10, {7, 2, 4, 6, 8, 8, 8, 8, 8, 8, 8, 8}),
        make_action(10, {8, 8, 8, 8, 8, 8, 8, 8, 6, 4, 2, 7}),
        make_action(4, {2, 2, 2, 2, 2, 1, 0, 2, 2, 2, 2, 2}),
    };
    bool fixed = std::all_of(D.begin(), D.end(), [&](const auto& a) { return fixes_ideal(I, a); });
    auto rep = multiplicity_free(D);
    run.check("7b", "diagonal subgroup fixes the ideal and is not multiplicity free", fixed && !rep.multiplicity_free,
              str(rep.repeated.size()) + " repeated pairs");
  });
  run.guarded("7c", "plus/minus", [&] {
    auto T = plusminus_basis_change(I, {{0, 11}, {1, 10}, {2, 9}, {3, 8}, {4, 7}}, {5, 6});
    Ideal stored = fixture("elliptic_bridge_diagonalized");
    bool same = true;
    for (unsigned m = 2; m <= 3 && same; ++m) same = same_slice(T, stored, m);
    const DiagonalAction D4 = make_action(240, {3, 3, 123, 123, 171, 171, 219, 219, 27, 27, 207, 147});
    const DiagonalAction A = make_action(240, {5, 125, 5, 125, 5, 125, 5, 125, 5, 125, 65, 5});
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    run.check("7c", "plus/minus change of basis reproduces the stored diagonalized list", same,
              "transform fixed by D4', A': " + yn(fixes_ideal(T, D4)) + ", " + yn(fixes_ideal(T, A)) +
                  "; stored list fixed by them: " + yn(fixes_ideal(stored, D4)) + ", " + yn(fixes_ideal(stored, A)) +
                  "; see the decisions ledger");
  });
  run.guarded("7d", "Chow", [&] {
    // the ideal in the plus/minus coordinates, where lambda acts diagonally
    auto T = plusminus_basis_change(I, {{0, 11}, {1, 10}, {2, 9}, {3, 8}, {4, 7}}, {5, 6});
    MonteCarloOptions o;
    o.seed = 20240611;
    auto c = chow_monte_carlo_check(T, 1, o);
    ++ledger.checked;
    if (!verify_containment(c.state.verdict, c.state.vertices, c.state.barycenter)) ++ledger.failed;
    // lambda in the new coordinates: 2 on every sum and difference, then 1, 0
    Weight lambda(10, 2);
    lambda.push_back(1);
    lambda.push_back(0);
    auto v = mu_values(T, lambda, {2, 3});
    auto p = fit(v, 2, 3);
    run.check("7d", "sampled Chow hull contains the barycenter and lambda has zero Chow weight: strictly semistable",
              c.contained && p.A == 0,
              str(c.weights_tried) + " weights, " + str(c.weights.size()) + " initial ideals, " +
                  containment_name(c.state.verdict.status) + ", mu along lambda " + p.to_string());
  });
  run.end();
}

// ------------------------------------------------------------------ 8

void criterion8(Run& run) {
  run.begin(8, "genus-5 curves with genus-2 tails");
  Ideal W = fixture("g2_weierstrass_tail");
  Ideal G = fixture("g2_general_tail");
  const Weight ww = repeat({{6, 8}, {4, 1}, {2, 1}, {0, 1}, {5, 1}});
  const Weight wg = repeat({{4, 8}, {3, 1}, {0, 1}, {1, 1}, {2, 1}});
  run.guarded("8", "Weierstrass mu", [&] {
    auto v = mu_values(W, ww, {2, 3});
    auto p = fit(v, 2, 3);
    run.check("8", "Weierstrass tail: mu = -32, -48 at m=2,3; fit 8(m-1)(m-6)",
              v == std::vector<Integer>{-32, -48} && p.A == 8 && p.B == -48, join(v) + "; " + p.to_string());
  });
  run.guarded("8", "general mu", [&] {
    auto v = mu_values(G, wg, {2, 3, 4});
    auto p = fit(v, 2, 3);
    run.check("8", "general tail: mu = -20, -24, -12 at m=2,3,4; fit 8(m-1)(m-9/2)",
              v == std::vector<Integer>{-20, -24, -12} && p.A == 8 && p.B == -36 && p(4) == Rational(v[2]),
              join(v) + "; " + p.to_string());
  });
  run.guarded("8", "specialization", [&] {
    auto B = buchberger(W, TermOrder(ww, Tiebreak::grevlex));
    Ideal limit = initial_forms(B, ww);
    std::vector<Polynomial> gens;
    bool rest_homogeneous = true, found = false;
    const Polynomial old = parse_polynomial("hi-k^2-l^2", W.ring);
    for (const auto& g : W.generators) {
      if (g == old || g == -old) {
        found = true;
        gens.push_back(parse_polynomial("hi-l^2", W.ring));
        continue;
      }
      std::set<std::int64_t> ws;
      for (const auto& t : g.terms()) ws.insert(monomial_weight(ww, t.m));
      rest_homogeneous = rest_homogeneous && ws.size() == 1;
      gens.push_back(g);
    }
    Ideal expected(W.ring, gens);
    bool same = found && rest_homogeneous;
    for (unsigned m = 2; m <= 4 && same; ++m) same = same_slice(limit, expected, m);
    run.check("8", "lambda limit of the Weierstrass tail replaces hi-k^2-l^2 by hi-l^2", same,
              "compared through degree 4");
  });
  monte_carlo_line(run, "8", "Weierstrass tail: Monte Carlo certifies stability at m=7", W, 7,
                   CertificateKind::stable);
  for (unsigned m : {5u, 6u, 7u})
    monte_carlo_line(run, "8", "general tail: Monte Carlo certifies stability at m=" + str(m), G, m,
                     CertificateKind::stable);
  run.end();
}

// ------------------------------------------------------------------ 9

Ideal random_ideal(std::mt19937_64& rng, std::size_t n, unsigned deg, std::size_t gens) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Polynomial> g;
  while (g.size() < gens) {
    std::vector<Term> ts;
    for (int k = 0; k < 3; ++k) {
      Monomial m(n);
      for (unsigned e = 0; e < deg; ++e) {
        auto i = var(rng);
        m.set(i, m[i] + 1);
      }
      int c = coef(rng);
      ts.push_back({m, Rational(c ? c : 1)});
    }
    Polynomial p(n, ts);
    if (!p.is_zero()) g.push_back(p);
  }
  return Ideal(Ring::letters(n), g);
}

Weight random_weight(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> d(-range, range);
  Weight w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(d(rng));
  return w;
}

// maximizing <w, chi_A> over nonzero Pluecker coordinates must give in_w(I)_m
bool pluecker_matches(const Ideal& I, unsigned m, std::mt19937_64& rng) {
  auto H = hilbert_matrix(I, m);
  auto P = pluecker_coordinates(I, m);
  for (int k = 0; k < 10; ++k) {
    Weight w = random_weight(rng, I.ring.size(), 1000);
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
    if (best && degree_state(I, w, m, Convention::inside).coords != chi_best) return false;
  }
  return true;
}

void criterion9(Run& run) {
  run.begin(9, "property checks replacing the out-of-scale computations");
  std::mt19937_64 rng(20240611);

  run.guarded("9a", "Pluecker", [&] {
    std::size_t cases = 0, bad = 0;
    for (const auto& name : fixture_names()) {
      Ideal I = fixture(name);
      for (unsigned m = 1; binomial(m + I.ring.size() - 1, m) <= 8; ++m) {
        ++cases;
        bad += !pluecker_matches(I, m, rng);
      }
    }
    for (int t = 0; t < 12; ++t) {
      ++cases;
      bad += !pluecker_matches(random_ideal(rng, 3, 2, 1 + t % 3), 2, rng);
    }
    for (int t = 0; t < 6; ++t) {
      ++cases;
      bad += !pluecker_matches(random_ideal(rng, 2, 3, 1 + t % 2), 7, rng);
    }
    run.check("9a", "Pluecker brute force equals the initial-ideal character whenever R(m) <= 8", bad == 0,
              str(cases) + " (ideal, m) pairs, 10 weights each");
  });

  run.guarded("9b", "flat degeneration", [&] {
    std::size_t tried = 0, bad = 0;
    for (const auto& name : fixture_names()) {
      Ideal I = fixture(name);
      const unsigned top = 3;
      std::vector<Integer> hf;
      for (unsigned m = 1; m <= top; ++m) hf.push_back(truncated_hilbert(I, m).P_hat);
      GBOptions o;
      o.max_degree = int(top);
      for (int k = 0; k < 100; ++k) {
        auto J = initial_ideal(I, random_weight(rng, I.ring.size(), 1000), Tiebreak::grevlex, o).ideal;
        ++tried;
        for (unsigned m = 1; m <= top; ++m)
          if (hilbert_from_leads(J, m).P_hat != hf[m - 1]) {
            ++bad;
            break;
          }
      }
    }
    run.check("9b", "initial ideals keep the Hilbert function (100 random weights per fixture, m=1..3)",
              bad == 0, str(tried) + " initial ideals over " + str(fixture_names().size()) + " fixtures");
  });

  run.guarded("9d", "duality", [&] {
    std::size_t cases = 0, bad = 0;
    for (const char* name : {"twisted_cubic", "two_points_p2", "cuspidal_cubic", "ribbon_g4", "wiman_2"}) {
      Ideal I = fixture(name);
      for (unsigned m = 2; m <= 3; ++m) {
        auto in = state_polytope(I, m, Convention::inside);
        auto out = state_polytope(I, m, Convention::outside);
        auto a = ledger.classify(in.vertices, barycenter(I, m, Convention::inside));
        auto b = ledger.classify(out.vertices, barycenter(I, m, Convention::outside));
        ++cases;
        bad += a.status != b.status || a.affine_dimension != b.affine_dimension;
      }
    }
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 3 + t % 2;
      Ideal I = random_ideal(rng, n, 2, 1 + t % 3);
      const unsigned m = 2;
      std::vector<Character> in, out;
      for (int k = 0; k < 6; ++k) {
        Weight w = random_weight(rng, n, 100);
        in.push_back(degree_state(I, w, m, Convention::inside));
        out.push_back(convert_convention(in.back(), n));
      }
      auto a = ledger.classify(in, barycenter(I, m, Convention::inside));
      auto b = ledger.classify(out, barycenter(I, m, Convention::outside));
      ++cases;
      bad += a.status != b.status;
    }
    run.check("9d", "containment verdicts agree in the inside and outside conventions", bad == 0,
              str(cases) + " configurations");
  });

  run.guarded("9e", "mu invariance", [&] {
    std::size_t cases = 0, bad = 0;
    for (const char* name : {"twisted_cubic", "cuspidal_cubic", "ribbon_g4", "wiman_3", "wiman_4"}) {
      Ideal I = fixture(name);
      const std::size_t n = I.ring.size();
      for (int k = 0; k < 8; ++k) {
        Weight w = random_weight(rng, n, 1000);
        std::int64_t shift = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
        std::int64_t scale = std::uniform_int_distribution<std::int64_t>(2, 9)(rng);
        Weight shifted = w, scaled = w;
        for (auto& x : shifted) x += shift;
        for (auto& x : scaled) x *= scale;
        for (unsigned m = 2; m <= 3; ++m) {
          auto base = mu(I, w, m).value;
          ++cases;
          bad += mu(I, shifted, m).value != base || mu(I, scaled, m).value != scale * base;
        }
      }
    }
    run.check("9e", "mu is unchanged by adding a constant and scales linearly", bad == 0,
              str(cases) + " (ideal, weight, m) triples");
  });

  run.guarded("9c", "certificates", [&] {
    std::size_t before = ledger.checked;
    for (int t = 0; t < 200; ++t) {
      std::size_t dim = 2 + t % 4, count = 1 + t % 9;
      std::vector<RatVec> P(count, RatVec(dim));
      RatVec target(dim);
      std::uniform_int_distribution<int> d(-6, 6);
      for (auto& p : P)
        for (auto& x : p) x = d(rng);
      for (auto& x : target) x = Rational(d(rng), 2);
      for (auto& x : target) x.canonicalize();
      ledger.classify(P, target);
    }
    run.check("9c", "every containment verdict of this run re-verifies from its certificate", ledger.failed == 0,
              str(ledger.checked) + " verdicts (" + str(ledger.checked - before) + " random), " +
                  str(ledger.failed) + " failed");
  });
  run.end();
}

}  // namespace

int main() {
  Run run;
  criterion1(run);
  criterion2(run);
  criterion3(run);
  criterion4(run);
  criterion5(run);
  criterion6(run);
  criterion7(run);
  criterion8(run);
  criterion9(run);
  return run.finish();
}
