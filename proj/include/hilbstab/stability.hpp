#pragma once

#include "hilbstab/state.hpp"

namespace hs {

// (N+1) * sum of w over the degree-m monomials of in_w(I), minus
// (sum of w) * m * Q(m). Negative values are destabilising.
struct MuValue {
  Integer value;
  unsigned m = 0;
  Weight weight;
  bool tiebreak_consulted = false;
};

MuValue mu(const Ideal& I, const Weight& w, unsigned m, Tiebreak tb = Tiebreak::grevlex);
// same quantity from an inside-convention character
Integer mu_of_character(const Character& inside, const Weight& w, const Integer& Q_hat);

// mu(m) = (m - 1)(A m + B), i.e. a (m - 1)(m - r) with a = A, r = -B/A
struct MuPolynomial {
  Rational A = 0, B = 0;
  bool hypothesis_asserted = true;  // both degrees lie in the caller's nice range

  const Rational& a() const { return A; }
  std::optional<Rational> root() const;
  Rational operator()(const Rational& m) const;
  std::string to_string() const;  // "4(m-1)(4m-9)" style
};

MuPolynomial parabola_fit(const std::pair<Rational, Rational>& s1,
                          const std::pair<Rational, Rational>& s2);

struct MonteCarloOptions {
  std::size_t batch = 0;  // 0 = 4(N+1)
  std::size_t max_rounds = 25;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::int64_t lo = -1000000, hi = 1000000;
  Tiebreak tiebreak = Tiebreak::grevlex;
  // After each random batch that leaves the target outside, query up to this
  // many weights along the separating direction. The character of in_s(I)_m
  // maximizes <s, .> over the state polytope, so each query either adds a
  // point across the separating hyperplane or shows that s destabilizes.
  std::size_t guided_steps = 8;
};

enum class CertificateKind { stable, semistable, inconclusive };
const char* certificate_kind_name(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::inconclusive;
  unsigned m = 0;
  std::uint64_t seed = 0;
  std::size_t weights_tried = 0;
  std::size_t rounds = 0;
  std::vector<Weight> weights;        // one producing weight per character
  std::vector<Character> characters;  // inside convention, distinct
  Barycenter target;
  ContainmentVerdict verdict;
  std::size_t tiebreak_hits = 0;
  std::size_t guided_weights = 0;  // how many of weights_tried came from separations
  // set when a separating direction s has <s, chi> < <s, target> at its own
  // initial ideal: mu(s) < 0 and the Hilbert point is unstable
  std::optional<Weight> destabilizing;
};

Certificate monte_carlo_check(const Ideal& I, unsigned m, const MonteCarloOptions& opts = {});

struct ReplayResult {
  ContainmentVerdict verdict;
  std::vector<Character> characters;
  std::vector<std::size_t> non_generic;  // weights whose order needed the tiebreak
};

ReplayResult verify_certificate(const Ideal& I, unsigned m, const std::vector<Weight>& weights,
                                Tiebreak tb = Tiebreak::grevlex);
// replay from stored monomial initial ideals
ReplayResult verify_certificate(const Ideal& I, unsigned m,
                                const std::vector<MonomialIdeal>& initial_ideals);

// Leading-coefficient limit of the outside-convention states.
struct ChowState {
  unsigned r = 0;
  std::vector<unsigned> degrees;               // sample degrees used
  std::vector<std::vector<RatVec>> polynomials;  // per cone: coefficient vectors, index = power of m
  std::vector<RatVec> vertices;                // distinct leading-coefficient vectors
  std::vector<std::vector<Integer>> normalized;  // vertices divided by their content
  RatVec barycenter;
  ContainmentVerdict verdict;
};

ChowState chow_state(const Ideal& I, const FanEnumeration& F, unsigned r, unsigned min_degree = 0);
// same from any list of initial ideals of I
ChowState chow_state(const Ideal& I, const std::vector<MonomialIdeal>& initials, unsigned r,
                     unsigned min_degree = 0);

// Chow state from the initial ideals of random weights, sampled in rounds
// until the leading-coefficient hull contains the barycenter. A sample can
// only shrink the hull, so containment is a certificate of Chow
// semistability; whether the point is interior to the full hull is not
// decided by a sample.
struct ChowCertificate {
  ChowState state;
  std::vector<Weight> weights;  // one producing weight per distinct initial ideal
  std::size_t weights_tried = 0;
  std::size_t rounds = 0;
  bool contained = false;
};
ChowCertificate chow_monte_carlo_check(const Ideal& I, unsigned r, const MonteCarloOptions& opts = {},
                                       unsigned min_degree = 0);

struct Slope {
  Rational lambda_coeff, delta_coeff, slope;
};
Slope polarization_slope(const Rational& nu, const Rational& m);
Rational polarization_slope_limit(const Rational& nu);

}  // namespace hs
