#include "hilbstab/groebner.hpp"

#include "gb_engine.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace hs {
namespace detail {

OPoly to_ordered(const Polynomial& p, const TermOrder& ord) {
  OPoly o(p.terms().begin(), p.terms().end());
  std::sort(o.begin(), o.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  return o;
}

Polynomial from_ordered(const OPoly& p, std::size_t nvars) { return Polynomial(nvars, p); }

void make_monic(OPoly& p) {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

OPoly sub_scaled(const OPoly& f, std::size_t fstart, const Rational& c, const Monomial& mono,
                 const OPoly& g, const TermOrder& ord) {
  OPoly out;
  out.reserve(f.size() - fstart + g.size());
  std::size_t i = fstart, j = 0;
  Monomial gm;
  bool have = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have) {
      gm = g[j].m * mono;
      have = true;
    }
    int s = i == f.size() ? -1 : j == g.size() ? 1 : ord.cmp(f[i].m, gm);
    if (s > 0) {
      out.push_back(f[i++]);
    } else if (s < 0) {
      out.push_back({gm, -c * g[j].c});
      ++j;
      have = false;
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (v != 0) out.push_back({f[i].m, std::move(v)});
      ++i, ++j;
      have = false;
    }
  }
  return out;
}

void Reducer::add(const OPoly* p) {
  polys_.push_back(p);
  leads_.push_back(make_lead(p->front().m));
}

int Reducer::find_divisor(const Monomial& m) const {
  std::uint64_t mask = support_mask(m), deg = m.degree();
  for (std::size_t k = 0; k < leads_.size(); ++k) {
    const Lead& l = leads_[k];
    if (l.deg > deg || (l.mask & ~mask)) continue;
    if (l.m.divides(m)) return int(k);
  }
  return -1;
}

OPoly Reducer::reduce(OPoly f) const {
  OPoly rem;
  std::size_t i = 0;
  while (i < f.size()) {
    int d = find_divisor(f[i].m);
    if (d < 0) {
      rem.push_back(std::move(f[i]));
      ++i;
      continue;
    }
    const OPoly& g = *polys_[std::size_t(d)];
    Monomial mono = f[i].m / g.front().m;
    Rational c = f[i].c;
    f = sub_scaled(f, i, c, mono, g, ord_);
    i = 0;
  }
  return rem;
}

std::vector<OPoly> interreduce(std::vector<OPoly> basis, const TermOrder& ord) {
  for (auto& b : basis) make_monic(b);
  std::sort(basis.begin(), basis.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.front().m, b.front().m) < 0; });
  // drop elements whose lead is divisible by another lead
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].front().m;
      const auto& b = basis[i].front().m;
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<OPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Reducer r(ord);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) r.add(&minimal[j]);
    OPoly tail(minimal[i].begin() + 1, minimal[i].end());
    OPoly red = r.reduce(std::move(tail));
    OPoly full;
    full.reserve(red.size() + 1);
    full.push_back(minimal[i].front());
    for (auto& t : red) full.push_back(std::move(t));
    out.push_back(std::move(full));
  }
  std::sort(out.begin(), out.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.front().m, b.front().m) > 0; });
  return out;
}

MarkedGroebnerBasis package(const Ring& ring, const TermOrder& ord, std::vector<OPoly> reduced,
                            int truncated_at) {
  MarkedGroebnerBasis G;
  G.ring = ring;
  G.order = ord;
  G.reduced = true;
  G.truncated_at = truncated_at;
  for (auto& p : reduced) {
    for (std::size_t k = 1; k < p.size(); ++k)
      if (ord.weight_tie(p.front().m, p[k].m)) G.tiebreak_consulted = true;
    G.marks.push_back(p.front().m);
    G.elements.push_back(from_ordered(p, ring.size()));
  }
  return G;
}

namespace {

struct Item {
  std::size_t i = 0, j = 0;  // pair (i, j) or input index i
  Monomial lcm;
  std::uint64_t deg = 0;
  std::uint64_t seq = 0;
  bool input = false;
};

class Engine {
 public:
  Engine(const TermOrder& ord, const GBOptions& opts) : ord_(ord), opts_(opts), red_(ord) {}

  std::vector<OPoly> run(std::vector<OPoly> inputs) {
    inputs_ = std::move(inputs);
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      if (inputs_[k].empty()) continue;
      std::uint64_t d = 0;
      for (const auto& t : inputs_[k]) d = std::max(d, t.m.degree());
      if (opts_.max_degree >= 0 && d > std::uint64_t(opts_.max_degree)) continue;
      Item it;
      it.i = k;
      it.deg = d;
      it.seq = seq_++;
      it.input = true;
      queue_.push_back(std::move(it));
    }
    std::size_t steps = 0;
    while (!queue_.empty()) {
      if (opts_.deadline && (++steps & 31) == 0 && Clock::now() > *opts_.deadline)
        throw BudgetExceeded("Groebner basis computation exceeded its time budget");
      auto best = std::min_element(queue_.begin(), queue_.end(), [](const Item& a, const Item& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.seq < b.seq;
      });
      if (opts_.max_degree >= 0 && best->deg > std::uint64_t(opts_.max_degree)) break;
      Item it = std::move(*best);
      *best = std::move(queue_.back());
      queue_.pop_back();
      OPoly h;
      if (it.input) {
        h = red_.reduce(std::move(inputs_[it.i]));
      } else {
        h = red_.reduce(spoly(G_[it.i], G_[it.j], it.lcm));
      }
      if (h.empty()) continue;
      make_monic(h);
      update(std::move(h));
    }
    std::vector<OPoly> basis;
    for (std::size_t k = 0; k < G_.size(); ++k)
      if (in_basis_[k]) basis.push_back(G_[k]);
    return basis;
  }

 private:
  OPoly spoly(const OPoly& f, const OPoly& g, const Monomial& L) {
    Monomial mf = L / f.front().m;
    OPoly fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.m * mf, t.c});
    return sub_scaled(fs, 0, 1, L / g.front().m, g, ord_);
  }

  void update(OPoly h) {
    const std::size_t k = G_.size();
    G_.push_back(std::move(h));
    const Monomial& lh = G_.back().front().m;
    leads_.push_back(lh);
    in_basis_.push_back(false);

    // new pairs with the chain and product criteria
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> C;
    for (std::size_t i = 0; i < k; ++i)
      if (in_basis_[i]) C.push_back({i, Monomial::lcm(leads_[i], lh), leads_[i].coprime(lh)});
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = C[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(C[a].lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(C[a].lcm)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    // old pairs made superfluous by lh
    queue_.erase(std::remove_if(queue_.begin(), queue_.end(),
                                [&](const Item& it) {
                                  if (it.input) return false;
                                  if (!lh.divides(it.lcm)) return false;
                                  return Monomial::lcm(leads_[it.i], lh) != it.lcm &&
                                         Monomial::lcm(leads_[it.j], lh) != it.lcm;
                                }),
                 queue_.end());
    for (auto& d : D) {
      if (d.coprime) continue;
      Item it;
      it.i = d.i;
      it.j = k;
      it.deg = d.lcm.degree();
      it.lcm = std::move(d.lcm);
      it.seq = seq_++;
      queue_.push_back(std::move(it));
    }
    for (std::size_t i = 0; i < k; ++i)
      if (in_basis_[i] && lh.divides(leads_[i])) in_basis_[i] = false;
    in_basis_[k] = true;
    red_.add(&G_.back());
  }

  const TermOrder& ord_;
  GBOptions opts_;
  Reducer red_;
  std::deque<OPoly> G_;
  std::vector<Monomial> leads_;
  std::vector<bool> in_basis_;
  std::vector<Item> queue_;
  std::vector<OPoly> inputs_;
  std::uint64_t seq_ = 0;
};

}  // namespace

std::vector<OPoly> buchberger_core(std::vector<OPoly> inputs, const TermOrder& ord,
                                   const GBOptions& opts) {
  Engine e(ord, opts);
  return interreduce(e.run(std::move(inputs)), ord);
}

}  // namespace detail

// ---------------------------------------------------------------- public API

MarkedGroebnerBasis buchberger(const Ideal& I, const TermOrder& order, const GBOptions& opts) {
  if (opts.max_degree >= 0 && !I.is_homogeneous())
    throw Error("degree truncation needs a homogeneous ideal");
  for (const auto& r : order.rows())
    if (r.size() != I.ring.size()) throw Error("weight vector length must equal the number of variables");
  std::vector<detail::OPoly> in;
  for (const auto& g : I.generators) in.push_back(detail::to_ordered(g, order));
  return detail::package(I.ring, order, detail::buchberger_core(std::move(in), order, opts),
                         opts.max_degree);
}

Polynomial normal_form(const Polynomial& p, const MarkedGroebnerBasis& G) {
  std::vector<detail::OPoly> polys;
  polys.reserve(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) {
    auto o = detail::to_ordered(G.elements[k], G.order);
    if (o.empty() || o.front().m != G.marks[k]) throw Error("basis marking disagrees with its order");
    polys.push_back(std::move(o));
  }
  detail::Reducer r(G.order);
  for (const auto& q : polys) r.add(&q);
  return detail::from_ordered(r.reduce(detail::to_ordered(p, G.order)), p.nvars());
}

InitialIdealResult initial_ideal(const Ideal& I, const Weight& w, Tiebreak tb,
                                 const GBOptions& opts) {
  InitialIdealResult r;
  r.basis = buchberger(I, TermOrder(w, tb), opts);
  r.ideal = MonomialIdeal(I.ring, r.basis.marks);
  r.tiebreak_consulted = r.basis.tiebreak_consulted;
  return r;
}

Ideal initial_forms(const MarkedGroebnerBasis& G, const Weight& w) {
  std::vector<Polynomial> out;
  for (const auto& g : G.elements) {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& t : g.terms()) {
      auto v = monomial_weight(w, t.m);
      if (first || v > best) best = v, first = false;
    }
    std::vector<Term> ts;
    for (const auto& t : g.terms())
      if (monomial_weight(w, t.m) == best) ts.push_back(t);
    out.emplace_back(G.ring.size(), std::move(ts));
  }
  return Ideal(G.ring, std::move(out));
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
  if (!(I.ring == J.ring)) throw Error("intersection needs ideals in the same ring");
  const std::size_t n = I.ring.size();
  auto lift = [&](const Polynomial& p, unsigned tpow) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m(n + 1);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.m[i]);
      m.set(n, tpow);
      ts.push_back({m, t.c});
    }
    return Polynomial(n + 1, std::move(ts));
  };
  Weight et(n + 1, 0);
  et[n] = 1;
  TermOrder elim(std::vector<Weight>{et}, Tiebreak::grevlex);
  std::vector<detail::OPoly> in;
  for (const auto& f : I.generators) in.push_back(detail::to_ordered(lift(f, 1), elim));
  for (const auto& g : J.generators)
    in.push_back(detail::to_ordered(lift(g, 0) - lift(g, 1), elim));
  auto basis = detail::buchberger_core(std::move(in), elim, {});
  std::vector<Polynomial> out;
  TermOrder grevlex;
  for (const auto& b : basis) {
    bool free_of_t = std::all_of(b.begin(), b.end(), [&](const Term& t) { return t.m[n] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> ts;
    for (const auto& t : b) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.m[i]);
      ts.push_back({m, t.c});
    }
    out.push_back(Polynomial(n, std::move(ts)).primitive(grevlex));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return grevlex.cmp(a.leading(grevlex).m, b.leading(grevlex).m) > 0;
  });
  return Ideal(I.ring, std::move(out));
}

HilbertData hilbert_from_leads(const MonomialIdeal& leads, unsigned m) {
  HilbertData h;
  h.m = m;
  h.R_hat = binomial(m + leads.nvars() - 1, leads.nvars() - 1);
  h.P_hat = leads.count_standard(m);
  h.Q_hat = h.R_hat - h.P_hat;
  return h;
}

HilbertData truncated_hilbert(const Ideal& I, unsigned m) {
  if (!I.is_homogeneous()) throw Error("truncated Hilbert data needs a homogeneous ideal");
  GBOptions o;
  o.max_degree = int(m);
  auto G = buchberger(I, TermOrder(Tiebreak::grevlex), o);
  return hilbert_from_leads(MonomialIdeal(I.ring, G.marks), m);
}

Integer gotzmann_number(const Integer& a, const Integer& b) { return a * (a - 1) / 2 + b; }

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
  // sorted descending in grevlex for stable keys and printing
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    return tiebreak_compare(Tiebreak::grevlex, a, b) > 0;
  });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::uint64_t MonomialIdeal::max_generator_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

void MonomialIdeal::for_each_standard(unsigned m,
                                      const std::function<void(const Monomial&)>& f) const {
  const std::size_t n = nvars();
  if (n == 0) return;
  Monomial cur(n);
  // a prefix already divisible by a generator stays divisible after extension
  auto divisible = [&]() {
    for (const auto& g : gens_)
      if (g.divides(cur)) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur.set(i, left);
      if (!divisible()) f(cur);
      cur.set(i, 0);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur.set(i, k);
      if (divisible()) break;
      self(self, i + 1, left - k);
    }
    cur.set(i, 0);
  };
  if (divisible()) return;  // the unit ideal
  rec(rec, 0, m);
}

Integer MonomialIdeal::count_standard(unsigned m) const {
  Integer c = 0;
  for_each_standard(m, [&](const Monomial&) { ++c; });
  return c;
}

std::vector<Integer> MonomialIdeal::standard_exponent_sum(unsigned m) const {
  std::vector<Integer> s(nvars(), 0);
  for_each_standard(m, [&](const Monomial& x) {
    for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
  });
  return s;
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(to_string(g, ring_));
  return out;
}

Ideal MonomialIdeal::ideal() const {
  std::vector<Polynomial> ps;
  for (const auto& g : gens_) ps.push_back(Polynomial::monomial(g));
  return Ideal(ring_, std::move(ps));
}

// ---------------------------------------------------------------- degree slices

DegreeSlice degree_slice(const Ideal& I, unsigned m, const TermOrder& order) {
  DegreeSlice s;
  s.columns = degree_basis(I.ring.size(), m, order);
  std::map<Monomial, std::size_t> col;
  for (std::size_t k = 0; k < s.columns.size(); ++k) col[s.columns[k]] = k;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : I.generators) {
    if (!g.is_homogeneous()) throw Error("degree slices need homogeneous generators");
    auto d = g.degree();
    if (d > m) continue;
    for (const auto& mult : degree_basis(I.ring.size(), unsigned(m - d))) {
      std::vector<Rational> row(s.columns.size(), 0);
      for (const auto& t : g.terms()) row[col.at(t.m * mult)] = t.c;
      rows.push_back(std::move(row));
    }
  }
  auto r = linalg::rref(std::move(rows), s.columns.size());
  s.rows = std::move(r.rows);
  s.pivots = std::move(r.pivots);
  return s;
}

bool same_slice(const Ideal& I, const Ideal& J, unsigned m) {
  if (I.ring.size() != J.ring.size()) return false;
  auto a = degree_slice(I, m), b = degree_slice(J, m);
  return a.rows == b.rows;
}

}  // namespace hs
