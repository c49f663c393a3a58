// hilbstab command line: every operation of the library, JSON on stdout.
// Exit codes: 0 computed, 2 inconclusive or budget exhausted, 1 error.

#include "hilbstab/curves.hpp"
#include "hilbstab/manifest.hpp"
#include "hilbstab/reps.hpp"
#include "hilbstab/stability.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

using nlohmann::json;
using namespace hs;

namespace {

constexpr int kInconclusive = 2;

struct Globals {
  std::string ideal_path;
  std::string fixture_name;
  std::uint64_t seed = 1;
  std::size_t budget_cones = 0;
  double budget_seconds = 0;
  std::string convention = "inside";
  std::string tiebreak = "grevlex";
  unsigned workers = 1;
};

struct Run {
  std::string command;
  std::vector<std::string> args;
  std::string input;  // raw ideal text, hashed into the manifest
  int code = 0;
};

json num(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json num(const Rational& q) {
  if (q.get_den() == 1) return num(Integer(q.get_num()));
  return q.get_str();
}

template <class T>
json nums(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

json ints(const std::vector<std::int64_t>& v) { return json(v); }

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  return slurp(f);
}

// text grammar, or JSON {"vars": [...], "generators": [...]} / {"ideal": "..."};
// {"ideal": {...}} as printed by the ideal-producing subcommands also works
Ideal ideal_from_json(json j) {
  while (j.contains("ideal") && j["ideal"].is_object()) j = json(j["ideal"]);
  std::optional<Ring> R;
  if (j.contains("vars")) R = Ring(j["vars"].get<std::vector<std::string>>());
  if (j.contains("ideal")) return parse_ideal(j["ideal"].get<std::string>(), R);
  std::string body;
  for (const auto& g : j.at("generators")) body += g.get<std::string>() + ",";
  return parse_ideal(body, R);
}

Ideal ideal_from_text(const std::string& text) {
  auto a = text.find_first_not_of(" \t\r\n");
  if (a != std::string::npos && text[a] == '{') return ideal_from_json(json::parse(text));
  return parse_ideal(text);
}

Ideal load_ideal(const Globals& g, Run& run) {
  if (!g.fixture_name.empty()) {
    run.input = fixture_text(g.fixture_name);
    return fixture(g.fixture_name);
  }
  run.input = read_file(g.ideal_path.empty() ? "-" : g.ideal_path);
  return ideal_from_text(run.input);
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    w.push_back(std::stoll(tok));
  }
  if (w.empty()) throw Error("empty weight");
  return w;
}

Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

json ideal_json(const Ideal& I) {
  json gens = json::array();
  for (const auto& p : I.generators) gens.push_back(to_string(p, I.ring));
  return {{"vars", I.ring.names()}, {"generators", gens}};
}

json monomial_ideal_json(const MonomialIdeal& J) { return J.to_strings(); }

json character_json(const Character& c) {
  return {{"m", c.m}, {"convention", convention_name(c.convention)}, {"coords", nums(c.coords)}};
}

json verdict_json(const ContainmentVerdict& v) {
  json j = {{"status", containment_name(v.status)},
            {"affine_dimension", v.affine_dimension},
            {"ambient_dimension", v.ambient_dimension},
            {"relative_interior", v.relative_interior}};
  if (!v.separating.empty()) j["separating"] = nums(v.separating);
  if (!v.multipliers.empty()) j["multipliers"] = nums(v.multipliers);
  return j;
}

json proximum_json(const Proximum& p) {
  std::vector<std::size_t> support(p.support.begin(), p.support.end());
  return {{"point", nums(p.point)},
          {"direction", nums(p.direction)},
          {"support", support},
          {"weights", nums(p.weights)},
          {"min_gap", num(p.min_gap)},
          {"kkt_verified", p.kkt_verified}};
}

json certificate_json(const Certificate& c) {
  json ws = json::array(), cs = json::array();
  for (const auto& w : c.weights) ws.push_back(ints(w));
  for (const auto& ch : c.characters) cs.push_back(nums(ch.coords));
  json out = {{"kind", certificate_kind_name(c.kind)},
          {"m", c.m},
          {"seed", c.seed},
          {"weights_tried", c.weights_tried},
          {"rounds", c.rounds},
          {"tiebreak_hits", c.tiebreak_hits},
          {"weights", ws},
          {"characters", cs},
          {"target", nums(c.target.coords)},
          {"verdict", verdict_json(c.verdict)},
          {"guided_weights", c.guided_weights}};
  if (c.destabilizing) out["destabilizing_weight"] = ints(*c.destabilizing);
  return out;
}

FanOptions fan_options(const Globals& g) {
  FanOptions o;
  o.max_cones = g.budget_cones;
  o.max_seconds = g.budget_seconds;
  o.workers = g.workers;
  o.tiebreak = parse_tiebreak(g.tiebreak);
  return o;
}

void emit(const Run& run, const Globals& g, json out) {
  out["manifest"] = make_manifest(run.command, run.args, g.seed, run.input);
  std::cout << out.dump(2) << "\n";
}

// one-row action spec "n:w0,w1,..."
DiagonalAction parse_action(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("action must look like modulus:w0,w1,...");
  return make_action(std::stoll(s.substr(0, colon)), parse_weight(s.substr(colon + 1)));
}

std::size_t var_index(const Ring& R, const std::string& s) {
  int k = R.index_of(s);
  if (k >= 0) return std::size_t(k);
  std::size_t pos = 0;
  unsigned long v = std::stoul(s, &pos);
  if (pos != s.size() || v >= R.size()) throw Error("unknown variable " + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner tools for low degree Hilbert stability"};
  app.require_subcommand(1);
  Globals g;
  Run run;
  for (int i = 1; i < argc; ++i) run.args.emplace_back(argv[i]);

  app.add_option("--ideal", g.ideal_path, "ideal file (text grammar or JSON); '-' or absent = stdin");
  app.add_option("--fixture", g.fixture_name, "use a stored curve ideal instead of --ideal");
  app.add_option("--seed", g.seed, "seed for every random choice");
  app.add_option("--budget-cones", g.budget_cones, "stop fan traversals after this many cones");
  app.add_option("--budget-seconds", g.budget_seconds, "stop fan traversals after this many seconds");
  app.add_option("--convention", g.convention, "inside|outside")->check(CLI::IsMember({"inside", "outside"}));
  app.add_option("--tiebreak", g.tiebreak, "grevlex|lex")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--workers", g.workers, "worker threads for fan and monte-carlo");

  std::function<void()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string weight_s;
  unsigned m = 2;
  int degree = -1;

  auto* c_gb = sub("groebner", "reduced Groebner basis under a weight order");
  c_gb->add_option("--weight,-w", weight_s, "comma separated weight (default all zero)");
  c_gb->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      Weight w = weight_s.empty() ? Weight(I.ring.size(), 0) : parse_weight(weight_s);
      auto G = buchberger(I, TermOrder(w, parse_tiebreak(g.tiebreak)));
      json el = json::array(), mk = json::array();
      for (std::size_t i = 0; i < G.size(); ++i) {
        el.push_back(to_string(G.elements[i], I.ring));
        mk.push_back(to_string(G.marks[i], I.ring));
      }
      emit(run, g, {{"elements", el}, {"marks", mk}, {"tiebreak_consulted", G.tiebreak_consulted}});
    };
  });

  auto* c_in = sub("initial-ideal", "monomial initial ideal in_w(I)");
  c_in->add_option("--weight,-w", weight_s, "comma separated weight")->required();
  c_in->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto r = initial_ideal(I, parse_weight(weight_s), parse_tiebreak(g.tiebreak));
      emit(run, g, {{"initial_ideal", monomial_ideal_json(r.ideal)},
                    {"tiebreak_consulted", r.tiebreak_consulted}});
    };
  });

  auto* c_fan = sub("fan", "enumerate the Groebner fan (all monomial initial ideals)");
  c_fan->add_option("--degree", degree, "enumerate degree-m initial spaces instead");
  c_fan->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto o = fan_options(g);
      o.degree = degree;
      auto F = enumerate_initial_ideals(I, o);
      json cones = json::array();
      for (const auto& c : F.cones)
        cones.push_back({{"initial", monomial_ideal_json(c.initial)}, {"witness", ints(c.witness)},
                         {"facets", c.facets.size()}});
      emit(run, g, {{"count", F.cones.size()}, {"complete", F.complete},
                    {"stop_reason", F.stop_reason}, {"cones", cones}});
      if (!F.complete) run.code = kInconclusive;
    };
  });

  auto* c_state = sub("state", "degree-m state of in_w(I)");
  c_state->add_option("--weight,-w", weight_s, "comma separated weight")->required();
  c_state->add_option("-m", m, "degree");
  c_state->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      bool tie = false;
      auto ch = degree_state(I, parse_weight(weight_s), m, parse_convention(g.convention),
                             parse_tiebreak(g.tiebreak), &tie);
      emit(run, g, {{"character", character_json(ch)}, {"tiebreak_consulted", tie},
                    {"barycenter", nums(barycenter(I, m, parse_convention(g.convention)).coords)}});
    };
  });

  auto* c_sp = sub("state-polytope", "vertices of the degree-m state polytope");
  c_sp->add_option("-m", m, "degree");
  c_sp->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto c = parse_convention(g.convention);
      auto P = state_polytope(I, m, c, fan_options(g));
      json vs = json::array();
      for (const auto& v : P.vertices) vs.push_back(nums(v.coords));
      emit(run, g, {{"m", m}, {"convention", g.convention}, {"vertices", vs},
                    {"cones", P.cones}, {"complete", P.complete}, {"stop_reason", P.stop_reason},
                    {"barycenter", nums(barycenter(I, m, c).coords)}});
      if (!P.complete) run.code = kInconclusive;
    };
  });

  std::string points_path;
  auto* c_cl = sub("classify", "does the state polytope contain the barycenter");
  c_cl->add_option("-m", m, "degree");
  c_cl->add_option("--points", points_path, "JSON {points: [[..]], target: [..]} instead of an ideal");
  c_cl->callback([&] {
    action = [&] {
      std::vector<RatVec> pts;
      RatVec target;
      bool complete = true;
      if (!points_path.empty()) {
        run.input = read_file(points_path);
        json j = json::parse(run.input);
        for (const auto& p : j.at("points")) {
          RatVec v;
          for (const auto& x : p) v.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
          pts.push_back(v);
        }
        for (const auto& x : j.at("target"))
          target.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
      } else {
        Ideal I = load_ideal(g, run);
        auto c = parse_convention(g.convention);
        auto P = state_polytope(I, m, c, fan_options(g));
        complete = P.complete;
        for (const auto& v : P.vertices) pts.push_back(v.rational());
        target = barycenter(I, m, c).coords;
      }
      auto v = classify_containment(pts, target);
      json out = {{"verdict", verdict_json(v)}, {"verified", verify_containment(v, pts, target)},
                  {"complete", complete}};
      if (complete)
        out["stability"] = v.status == Containment::full_dim_interior ? "stable"
                           : v.status == Containment::outside       ? "unstable"
                                                                    : "strictly semistable";
      emit(run, g, out);
      if (!complete && v.status == Containment::outside) run.code = kInconclusive;
    };
  });

  auto* c_px = sub("proximum", "nearest point of the state polytope to the barycenter");
  c_px->add_option("-m", m, "degree");
  c_px->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto c = parse_convention(g.convention);
      auto P = state_polytope(I, m, c, fan_options(g));
      if (!P.complete) throw Error("proximum needs the full vertex set; raise the budget");
      auto px = proximum(P.vertices, barycenter(I, m, c));
      emit(run, g, {{"proximum", proximum_json(px)}});
    };
  });

  auto* c_mu = sub("mu", "Hilbert-Mumford index of the degree-m Hilbert point");
  c_mu->add_option("--weight,-w", weight_s, "comma separated weight")->required();
  c_mu->add_option("-m", m, "degree");
  c_mu->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto v = mu(I, parse_weight(weight_s), m, parse_tiebreak(g.tiebreak));
      emit(run, g, {{"m", m}, {"mu", num(v.value)}, {"tiebreak_consulted", v.tiebreak_consulted}});
    };
  });

  unsigned m1 = 2, m2 = 3;
  std::string at_s;
  auto* c_mat = sub("mu-at", "mu at a rational degree through the parabola of two samples");
  c_mat->add_option("--weight,-w", weight_s, "comma separated weight")->required();
  c_mat->add_option("--m1", m1, "first sample degree");
  c_mat->add_option("--m2", m2, "second sample degree");
  c_mat->add_option("--at", at_s, "rational degree, e.g. 9/2")->required();
  c_mat->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      Weight w = parse_weight(weight_s);
      auto tb = parse_tiebreak(g.tiebreak);
      auto v1 = mu(I, w, m1, tb), v2 = mu(I, w, m2, tb);
      auto p = parabola_fit({Rational(m1), Rational(v1.value)}, {Rational(m2), Rational(v2.value)});
      Rational at = parse_rational(at_s);
      emit(run, g, {{"parabola", p.to_string()}, {"at", num(at)}, {"mu", num(p(at))},
                    {"samples", {{m1, num(v1.value)}, {m2, num(v2.value)}}}});
    };
  });

  std::vector<std::string> samples;
  auto* c_par = sub("parabola", "fit mu(m) = (m-1)(A m + B) through two samples m:value");
  c_par->add_option("--sample", samples, "m:value, given twice")->required()->expected(2);
  c_par->callback([&] {
    action = [&] {
      std::vector<std::pair<Rational, Rational>> s;
      for (const auto& t : samples) {
        auto colon = t.find(':');
        if (colon == std::string::npos) throw Error("sample must look like m:value");
        s.push_back({parse_rational(t.substr(0, colon)), parse_rational(t.substr(colon + 1))});
      }
      auto p = parabola_fit(s[0], s[1]);
      json out = {{"parabola", p.to_string()}, {"a", num(p.a())}};
      if (auto r = p.root()) out["root"] = num(*r);
      emit(run, g, out);
    };
  });

  std::size_t batch = 0, rounds = 25;
  auto* c_mc = sub("monte-carlo", "search random weights for a containment certificate");
  c_mc->add_option("-m", m, "degree");
  c_mc->add_option("--batch", batch, "weights per round (default 4(N+1))");
  c_mc->add_option("--rounds", rounds, "maximum rounds");
  std::size_t guided = 8;
  c_mc->add_option("--guided", guided, "separation-guided weights per round (0 = purely random)");
  c_mc->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      MonteCarloOptions o;
      o.batch = batch;
      o.max_rounds = rounds;
      o.guided_steps = guided;
      o.seed = g.seed;
      o.workers = g.workers;
      o.tiebreak = parse_tiebreak(g.tiebreak);
      auto cert = monte_carlo_check(I, m, o);
      emit(run, g, {{"certificate", certificate_json(cert)}});
      if (cert.kind == CertificateKind::inconclusive) run.code = kInconclusive;
    };
  });

  std::string cert_path;
  auto* c_ver = sub("verify", "replay a Monte Carlo certificate");
  c_ver->add_option("--certificate", cert_path, "JSON written by monte-carlo")->required();
  c_ver->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      json j = json::parse(read_file(cert_path));
      if (j.contains("certificate")) j = j["certificate"];
      std::vector<Weight> ws;
      for (const auto& w : j.at("weights")) ws.push_back(w.get<Weight>());
      unsigned mm = j.at("m").get<unsigned>();
      auto r = verify_certificate(I, mm, ws, parse_tiebreak(g.tiebreak));
      std::set<std::vector<std::string>> stored, replayed;
      for (const auto& c : j.at("characters")) {
        std::vector<std::string> v;
        for (const auto& x : c) v.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        stored.insert(v);
      }
      for (const auto& c : r.characters) {
        std::vector<std::string> v;
        for (const auto& x : c.coords) v.push_back(x.get_str());
        replayed.insert(v);
      }
      bool same = stored == replayed;
      std::vector<std::size_t> ng(r.non_generic.begin(), r.non_generic.end());
      emit(run, g, {{"m", mm}, {"verdict", verdict_json(r.verdict)}, {"characters_match", same},
                    {"non_generic_weights", ng}});
      if (!same || r.verdict.status == Containment::outside) run.code = kInconclusive;
    };
  });

  unsigned chow_r = 1, chow_min = 0;
  auto* c_chow = sub("chow", "Chow polytope from the leading coefficients of the states");
  c_chow->add_option("--dim", chow_r, "dimension of the subscheme");
  c_chow->add_option("--min-degree", chow_min, "smallest sample degree");
  std::size_t chow_rounds = 0;
  c_chow->add_option("--sample-rounds", chow_rounds,
                     "sample initial ideals of random weights for this many rounds instead of the full fan");
  c_chow->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      if (chow_rounds) {
        MonteCarloOptions o;
        o.max_rounds = chow_rounds;
        o.seed = g.seed;
        o.workers = g.workers;
        o.tiebreak = parse_tiebreak(g.tiebreak);
        auto c = chow_monte_carlo_check(I, chow_r, o, chow_min);
        json vs = json::array(), ws = json::array();
        for (const auto& v : c.state.vertices) vs.push_back(nums(v));
        for (const auto& w : c.weights) ws.push_back(ints(w));
        emit(run, g, {{"degrees", c.state.degrees}, {"vertices", vs}, {"barycenter", nums(c.state.barycenter)},
                      {"verdict", verdict_json(c.state.verdict)}, {"contained", c.contained},
                      {"weights", ws}, {"weights_tried", c.weights_tried}, {"rounds", c.rounds}});
        if (!c.contained) run.code = kInconclusive;
        return;
      }
      auto F = enumerate_initial_ideals(I, fan_options(g));
      if (!F.complete) {
        emit(run, g, {{"complete", false}, {"stop_reason", F.stop_reason}});
        run.code = kInconclusive;
        return;
      }
      auto C = chow_state(I, F, chow_r, chow_min);
      json vs = json::array(), ns = json::array();
      for (const auto& v : C.vertices) vs.push_back(nums(v));
      for (const auto& v : C.normalized) ns.push_back(nums(v));
      emit(run, g, {{"degrees", C.degrees}, {"vertices", vs}, {"normalized", ns},
                    {"barycenter", nums(C.barycenter)}, {"verdict", verdict_json(C.verdict)},
                    {"cones", F.cones.size()}});
    };
  });

  std::uint64_t pl_budget = 1000000;
  auto* c_pl = sub("plucker", "Pluecker coordinates of the degree-m Hilbert point");
  c_pl->add_option("-m", m, "degree");
  c_pl->add_option("--max-sets", pl_budget, "refuse above this many Pluecker sets");
  c_pl->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      auto P = pluecker_coordinates(I, m, pl_budget);
      auto H = hilbert_matrix(I, m);
      json cols = json::array();
      for (const auto& c : H.columns) cols.push_back(to_string(c, I.ring));
      emit(run, g, {{"columns", cols}, {"sets", P.sets}, {"coords", nums(P.coords)}});
    };
  });

  auto* c_h = sub("hilbert", "truncated Hilbert data up to degree m");
  c_h->add_option("-m", m, "degree");
  c_h->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      json rows = json::array();
      for (unsigned d = 1; d <= m; ++d) {
        auto h = truncated_hilbert(I, d);
        rows.push_back({{"m", d}, {"R", num(h.R_hat)}, {"Q", num(h.Q_hat)}, {"P", num(h.P_hat)}});
      }
      emit(run, g, {{"hilbert", rows}});
    };
  });

  std::string ga = "0", gb = "0";
  auto* c_gz = sub("gotzmann", "Gotzmann number of P(t) = a t + b");
  c_gz->add_option("-a", ga, "leading coefficient")->required();
  c_gz->add_option("-b", gb, "constant term")->required();
  c_gz->callback([&] {
    action = [&] { emit(run, g, {{"gotzmann", num(gotzmann_number(Integer(ga), Integer(gb)))}}); };
  });

  // curves
  unsigned genus = 4, nu = 2;
  std::string fcoeffs, fx_name;
  bool list_fixtures = false;
  auto* c_curve = sub("curve", "construct curve ideals");
  c_curve->require_subcommand(1);
  auto* c_wiman = c_curve->add_subcommand("wiman", "Wiman curve y^2 = x^(2g+1) - 1");
  c_wiman->fallthrough();
  c_wiman->add_option("--genus,-g", genus, "genus")->required();
  c_wiman->add_option("--nu", nu, "canonical multiple");
  c_wiman->callback([&] {
    action = [&] {
      auto d = wiman_data(genus, nu);
      emit(run, g, {{"basis", pluricanonical_basis(d)}, {"ideal", ideal_json(wiman_ideal(genus, nu))}});
    };
  });
  auto* c_hyp = c_curve->add_subcommand("hyperelliptic", "y^2 = f(x) embedded by nu(K + 2P)/2");
  c_hyp->fallthrough();
  c_hyp->add_option("--genus,-g", genus, "genus")->required();
  c_hyp->add_option("--nu", nu, "canonical multiple");
  c_hyp->add_option("--f", fcoeffs, "coefficients of f, constant term first")->required();
  c_hyp->callback([&] {
    action = [&] {
      HyperellipticData d;
      d.g = genus;
      d.nu = nu;
      std::stringstream ss(fcoeffs);
      std::string tok;
      while (std::getline(ss, tok, ',')) d.f.push_back(parse_rational(tok));
      emit(run, g, {{"basis", pluricanonical_basis(d)},
                    {"ideal", ideal_json(hyperelliptic_pluricanonical_ideal(d))}});
    };
  });
  auto fixture_cmd = [&](CLI::App* s) {
    s->fallthrough();
    s->add_option("name", fx_name, "fixture name");
    s->add_flag("--list", list_fixtures, "list fixture names");
    s->callback([&] {
      action = [&] {
        if (list_fixtures || fx_name.empty()) {
          emit(run, g, {{"fixtures", fixture_names()}});
          return;
        }
        run.input = fixture_text(fx_name);
        json out = {{"name", fx_name}, {"text", run.input}, {"ideal", ideal_json(fixture(fx_name))}};
        json comps = json::array();
        for (const auto& c : fixture_components(fx_name)) comps.push_back(ideal_json(c));
        if (!comps.empty()) out["components"] = comps;
        emit(run, g, out);
      };
    });
  };
  fixture_cmd(c_curve->add_subcommand("fixture", "stored curve ideal"));
  fixture_cmd(sub("fixture", "stored curve ideal (alias of curve fixture)"));

  // representations
  std::vector<std::string> actions, swaps;
  std::vector<std::string> fixed;
  auto* c_reps = sub("reps", "automorphism bookkeeping with residue characters");
  c_reps->require_subcommand(1);
  auto* c_mf = c_reps->add_subcommand("multfree", "are the joint characters pairwise distinct");
  c_mf->fallthrough();
  c_mf->add_option("--action", actions, "modulus:w0,w1,... (repeatable)")->required();
  c_mf->callback([&] {
    action = [&] {
      std::vector<DiagonalAction> as;
      for (const auto& s : actions) as.push_back(parse_action(s));
      auto r = multiplicity_free(as);
      emit(run, g, {{"multiplicity_free", r.multiplicity_free}, {"characters", r.characters},
                    {"repeated", r.repeated}});
    };
  });
  auto* c_sl = c_reps->add_subcommand("slnormalize", "lift a diagonal action to determinant one");
  c_sl->fallthrough();
  c_sl->add_option("--action", actions, "modulus:w0,w1,...")->required();
  c_sl->callback([&] {
    action = [&] {
      auto r = sl_normalize(parse_action(actions.at(0)));
      emit(run, g, {{"modulus", r.action.modulus}, {"weights", r.action.weights}, {"k", r.k}, {"t", r.t}});
    };
  });
  auto* c_pm = c_reps->add_subcommand("plusminus", "change to the sum/difference eigenbasis of swaps");
  c_pm->fallthrough();
  c_pm->add_option("--swap", swaps, "i:j, variable names or indices (repeatable)");
  c_pm->add_option("--fixed", fixed, "unswapped variables, in output order (repeatable)");
  c_pm->callback([&] {
    action = [&] {
      Ideal I = load_ideal(g, run);
      std::vector<std::pair<std::size_t, std::size_t>> sw;
      for (const auto& s : swaps) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw Error("swap must look like i:j");
        sw.push_back({var_index(I.ring, s.substr(0, colon)), var_index(I.ring, s.substr(colon + 1))});
      }
      std::vector<std::size_t> fx;
      for (const auto& s : fixed) fx.push_back(var_index(I.ring, s));
      if (fixed.empty()) {
        std::vector<bool> used(I.ring.size(), false);
        for (auto [i, j] : sw) used.at(i) = used.at(j) = true;
        for (std::size_t i = 0; i < used.size(); ++i)
          if (!used[i]) fx.push_back(i);
      }
      emit(run, g, {{"ideal", ideal_json(plusminus_basis_change(I, sw, fx))}});
    };
  });

  std::string slope_nu = "2", slope_m = "2";
  auto* c_slope = sub("slope", "slope of the polarization of the m-th Hilbert point");
  c_slope->add_option("--nu", slope_nu, "canonical multiple");
  c_slope->add_option("-m", slope_m, "degree (rational allowed)");
  c_slope->callback([&] {
    action = [&] {
      Rational n = parse_rational(slope_nu), mm = parse_rational(slope_m);
      auto s = polarization_slope(n, mm);
      emit(run, g, {{"lambda", num(s.lambda_coeff)}, {"delta", num(s.delta_coeff)},
                    {"slope", num(s.slope)}, {"limit", num(polarization_slope_limit(n))}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  // the first subcommand token names the run
  for (const auto* s : app.get_subcommands()) {
    run.command = s->get_name();
    for (const auto* t : s->get_subcommands()) run.command += " " + t->get_name();
  }
  try {
    if (!action) throw Error("no command");
    action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return run.code;
}
