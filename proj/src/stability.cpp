#include "hilbstab/stability.hpp"

#include "linalg.hpp"

#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace hs {

// ---------------------------------------------------------------- mu

Integer mu_of_character(const Character& inside, const Weight& w, const Integer& Q_hat) {
  if (inside.convention != Convention::inside) throw Error("mu needs an inside-convention character");
  if (w.size() != inside.coords.size()) throw Error("weight length must equal the number of variables");
  Integer dot = 0, wsum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    dot += Integer(w[i]) * inside.coords[i];
    wsum += w[i];
  }
  return Integer(w.size()) * dot - wsum * inside.m * Q_hat;
}

MuValue mu(const Ideal& I, const Weight& w, unsigned m, Tiebreak tb) {
  if (w.size() != I.ring.size()) throw Error("weight length must equal the number of variables");
  GBOptions opts;
  if (I.is_homogeneous()) opts.max_degree = int(m);
  auto r = initial_ideal(I, w, tb, opts);
  auto h = hilbert_from_leads(r.ideal, m);
  MuValue v;
  v.m = m;
  v.weight = w;
  v.tiebreak_consulted = r.tiebreak_consulted;
  v.value = mu_of_character(degree_state(r.ideal, m, Convention::inside), w, h.Q_hat);
  return v;
}

std::optional<Rational> MuPolynomial::root() const {
  if (A == 0) return std::nullopt;
  Rational r = -B / A;
  return r;
}

Rational MuPolynomial::operator()(const Rational& m) const { return (m - 1) * (A * m + B); }

std::string MuPolynomial::to_string() const {
  std::ostringstream os;
  if (A == 0) {
    if (B == 0) return "0";
    os << B << "(m-1)";
    return os.str();
  }
  // factor A m + B as c (p m - q) with p, q coprime integers and p > 0
  Integer den;
  mpz_lcm(den.get_mpz_t(), A.get_den_mpz_t(), B.get_den_mpz_t());
  Integer p = A.get_num() * (den / A.get_den());
  Integer q = -B.get_num() * (den / B.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  Rational c(g, den);
  c.canonicalize();
  if (p < 0) p = -p, q = -q, c = -c;
  if (c == -1) os << "-";
  else if (c != 1) os << c;
  os << "(m-1)(";
  if (p != 1) os << p;
  os << "m";
  if (q > 0) os << "-" << q;
  else if (q < 0) os << "+" << -q;
  os << ")";
  return os.str();
}

MuPolynomial parabola_fit(const std::pair<Rational, Rational>& s1,
                          const std::pair<Rational, Rational>& s2) {
  const auto& [m1, v1] = s1;
  const auto& [m2, v2] = s2;
  if (m1 == m2) throw Error("parabola fit needs two distinct degrees");
  for (const auto& [m, v] : {s1, s2})
    if (m == 1 && v != 0) throw Error("a sample at m = 1 must vanish");
  if (m1 == 1 || m2 == 1) throw Error("a sample at m = 1 does not determine the parabola");
  // mu / (m - 1) = A m + B
  Rational y1 = v1 / (m1 - 1), y2 = v2 / (m2 - 1);
  MuPolynomial p;
  p.A = (y2 - y1) / (m2 - m1);
  p.B = y1 - p.A * m1;
  return p;
}

// ---------------------------------------------------------------- Monte Carlo

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::stable: return "stable";
    case CertificateKind::semistable: return "semistable";
    case CertificateKind::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

template <class Job>
void parallel_for(std::size_t count, unsigned workers, const Job& job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu_err;
  auto body = [&] {
    while (true) {
      std::size_t k = next++;
      if (k >= count) return;
      try {
        job(k);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu_err);
        if (!err) err = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(std::max(1u, workers), count); ++t)
    pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

struct Sample {
  Character ch;
  bool tie = false;
};

Sample sample_character(const Ideal& I, const Weight& w, unsigned m, Tiebreak tb) {
  Sample s;
  s.ch = degree_state(I, w, m, Convention::inside, tb, &s.tie);
  return s;
}

}  // namespace

Certificate monte_carlo_check(const Ideal& I, unsigned m, const MonteCarloOptions& opts) {
  if (m < 1) throw Error("Monte Carlo needs m >= 1");
  const std::size_t n = I.ring.size();
  const std::size_t batch = opts.batch ? opts.batch : 4 * n;
  Certificate cert;
  cert.m = m;
  cert.seed = opts.seed;
  cert.target = barycenter(I, m, Convention::inside);
  WeightStream stream(opts.seed, opts.lo, opts.hi);
  std::set<Character> seen;
  auto record = [&](const Weight& w, const Sample& s) {
    if (s.tie) ++cert.tiebreak_hits;
    ++cert.weights_tried;
    if (!seen.insert(s.ch).second) return false;
    cert.characters.push_back(s.ch);
    cert.weights.push_back(w);
    return true;
  };
  for (std::size_t round = 0; round < opts.max_rounds; ++round) {
    std::vector<Weight> ws;
    for (std::size_t k = 0; k < batch; ++k) ws.push_back(stream.next(n));
    std::vector<Sample> got(ws.size());
    parallel_for(ws.size(), opts.workers,
                 [&](std::size_t k) { got[k] = sample_character(I, ws[k], m, opts.tiebreak); });
    for (std::size_t k = 0; k < ws.size(); ++k) record(ws[k], got[k]);
    cert.rounds = round + 1;
    cert.verdict = classify_containment(cert.characters, cert.target);
    for (std::size_t step = 0;
         step < opts.guided_steps && cert.verdict.status == Containment::outside; ++step) {
      // the exact separating vector can be huge; a rounded copy with entries
      // up to 2^30 points the same way to within the rounding
      const auto& sep = cert.verdict.separating;
      Integer top = 0;
      for (const auto& x : sep) top = std::max<Integer>(top, abs(x));
      if (top == 0) break;
      const Integer cap = Integer(1) << 30;
      Weight s;
      for (const auto& x : sep) {
        Integer r = top <= cap ? Integer(x) : Integer((2 * x * cap + top) / (2 * top));
        s.push_back(r.get_si());
      }
      auto got_s = sample_character(I, s, m, opts.tiebreak);
      ++cert.guided_weights;
      Rational at_point = 0, at_target = 0;
      for (std::size_t i = 0; i < n; ++i) {
        at_point += Rational(s[i]) * Rational(got_s.ch.coords[i]);
        at_target += Rational(s[i]) * cert.target.coords[i];
      }
      record(s, got_s);
      if (at_point < at_target) {
        cert.destabilizing = s;
        break;
      }
      cert.verdict = classify_containment(cert.characters, cert.target);
    }
    if (cert.verdict.status == Containment::full_dim_interior) {
      cert.kind = CertificateKind::stable;
      return cert;
    }
    if (cert.destabilizing) break;
  }
  cert.kind = cert.verdict.status == Containment::outside ? CertificateKind::inconclusive
                                                          : CertificateKind::semistable;
  return cert;
}

ReplayResult verify_certificate(const Ideal& I, unsigned m, const std::vector<Weight>& weights,
                                Tiebreak tb) {
  if (weights.empty()) throw Error("certificate replay needs at least one weight");
  ReplayResult r;
  std::set<Character> seen;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    auto s = sample_character(I, weights[k], m, tb);
    if (s.tie) r.non_generic.push_back(k);
    if (seen.insert(s.ch).second) r.characters.push_back(s.ch);
  }
  r.verdict = classify_containment(r.characters, barycenter(I, m, Convention::inside));
  return r;
}

ReplayResult verify_certificate(const Ideal& I, unsigned m,
                                const std::vector<MonomialIdeal>& initial_ideals) {
  if (initial_ideals.empty()) throw Error("certificate replay needs at least one initial ideal");
  ReplayResult r;
  std::set<Character> seen;
  for (const auto& J : initial_ideals)
    if (seen.insert(degree_state(J, m, Convention::inside)).second)
      r.characters.push_back(degree_state(J, m, Convention::inside));
  r.verdict = classify_containment(r.characters, barycenter(I, m, Convention::inside));
  return r;
}

// ---------------------------------------------------------------- Chow

namespace {

// coefficients c_0..c_d of the polynomial through (x_i, y_i), i = 0..d
std::vector<RatVec> interpolate(const std::vector<unsigned>& xs, const std::vector<RatVec>& ys) {
  const std::size_t d1 = xs.size(), dim = ys.front().size();
  std::vector<RatVec> coeffs(d1, RatVec(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    linalg::Mat V(d1, RatVec(d1));
    RatVec rhs(d1);
    for (std::size_t i = 0; i < d1; ++i) {
      Rational p = 1;
      for (std::size_t k = 0; k < d1; ++k) V[i][k] = p, p *= xs[i];
      rhs[i] = ys[i][c];
    }
    auto sol = linalg::solve(std::move(V), std::move(rhs));
    for (std::size_t k = 0; k < d1; ++k) coeffs[k][c] = (*sol)[k];
  }
  return coeffs;
}

RatVec evaluate(const std::vector<RatVec>& coeffs, unsigned x) {
  RatVec out(coeffs.front().size(), 0);
  Rational p = 1;
  for (const auto& c : coeffs) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += p * c[i];
    p *= x;
  }
  return out;
}

}  // namespace

ChowState chow_state(const Ideal& I, const FanEnumeration& F, unsigned r, unsigned min_degree) {
  if (!F.complete) throw Error("Chow state needs a complete fan");
  std::vector<MonomialIdeal> initials;
  for (const auto& c : F.cones) initials.push_back(c.initial);
  return chow_state(I, initials, r, min_degree);
}

ChowState chow_state(const Ideal& I, const std::vector<MonomialIdeal>& initials, unsigned r,
                     unsigned min_degree) {
  if (initials.empty()) throw Error("Chow state needs at least one initial ideal");
  const std::size_t n = I.ring.size();
  unsigned d0 = min_degree;
  for (const auto& J : initials) d0 = std::max<unsigned>(d0, unsigned(J.max_generator_degree()));
  for (unsigned attempt = 0; attempt < 16; ++attempt, ++d0) {
    ChowState out;
    out.r = r;
    for (unsigned k = 0; k < r + 3; ++k) out.degrees.push_back(d0 + k);
    std::vector<unsigned> fit(out.degrees.begin(), out.degrees.end() - 1);
    bool consistent = true;
    std::set<RatVec> seen;
    for (const auto& J : initials) {
      std::vector<RatVec> ys;
      for (auto d : fit) ys.push_back(degree_state(J, d, Convention::outside).rational());
      auto coeffs = interpolate(fit, ys);
      if (evaluate(coeffs, out.degrees.back()) != degree_state(J, out.degrees.back(), Convention::outside).rational()) {
        consistent = false;
        break;
      }
      if (seen.insert(coeffs.back()).second) out.vertices.push_back(coeffs.back());
      out.polynomials.push_back(std::move(coeffs));
    }
    // m * P(m) through the same degrees
    std::vector<RatVec> mp;
    for (auto d : fit) mp.push_back({Rational(Integer(d) * truncated_hilbert(I, d).P_hat)});
    auto mpc = interpolate(fit, mp);
    if (evaluate(mpc, out.degrees.back())[0] !=
        Rational(Integer(out.degrees.back()) * truncated_hilbert(I, out.degrees.back()).P_hat))
      consistent = false;
    if (!consistent) continue;
    out.barycenter.assign(n, mpc.back()[0] / Rational(Integer(n)));
    for (const auto& v : out.vertices) out.normalized.push_back(linalg::primitive(v));
    out.verdict = classify_containment(out.vertices, out.barycenter);
    return out;
  }
  throw Error("Chow interpolation did not stabilise; samples too small");
}

ChowCertificate chow_monte_carlo_check(const Ideal& I, unsigned r, const MonteCarloOptions& opts,
                                       unsigned min_degree) {
  const std::size_t n = I.ring.size();
  const std::size_t batch = opts.batch ? opts.batch : 4 * n;
  ChowCertificate cert;
  WeightStream stream(opts.seed, opts.lo, opts.hi);
  std::set<MonomialIdeal> seen;
  std::vector<MonomialIdeal> initials;
  for (std::size_t round = 0; round < opts.max_rounds; ++round) {
    std::vector<Weight> ws;
    for (std::size_t k = 0; k < batch; ++k) ws.push_back(stream.next(n));
    std::vector<MonomialIdeal> got(ws.size());
    parallel_for(ws.size(), opts.workers,
                 [&](std::size_t k) { got[k] = initial_ideal(I, ws[k], opts.tiebreak).ideal; });
    for (std::size_t k = 0; k < ws.size(); ++k)
      if (seen.insert(got[k]).second) {
        initials.push_back(got[k]);
        cert.weights.push_back(ws[k]);
      }
    cert.weights_tried += ws.size();
    cert.rounds = round + 1;
    cert.state = chow_state(I, initials, r, min_degree);
    cert.contained = cert.state.verdict.status != Containment::outside;
    if (cert.contained) break;
  }
  return cert;
}

// ---------------------------------------------------------------- slope

Slope polarization_slope(const Rational& nu, const Rational& m) {
  if (nu < 1) throw Error("nu must be at least 1");
  if (m <= 1) throw Error("m must exceed 1");
  Slope s;
  s.lambda_coeff = 6 * nu * nu * m - 2 * nu * m - 2 * nu + 1;
  s.delta_coeff = -nu * nu * m / 2;
  s.slope = s.lambda_coeff / (nu * nu * m / 2);
  return s;
}

Rational polarization_slope_limit(const Rational& nu) {
  if (nu < 1) throw Error("nu must be at least 1");
  return 12 - 4 / nu;
}

}  // namespace hs
