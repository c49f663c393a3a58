#pragma once

#include "hilbstab/groebner.hpp"

namespace hs {

// zeta -> diag(zeta^w_0, ..., zeta^w_N) with zeta a primitive modulus-th root of unity
struct DiagonalAction {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> weights;  // residues in [0, modulus)
};

DiagonalAction make_action(std::int64_t modulus, const std::vector<std::int64_t>& weights);

// Coordinates whose characters agree under every action.
struct MultiplicityReport {
  bool multiplicity_free = true;
  std::vector<std::vector<std::int64_t>> characters;  // per coordinate, one residue per action
  std::vector<std::pair<std::size_t, std::size_t>> repeated;  // first colliding pairs
};
MultiplicityReport multiplicity_free(const std::vector<DiagonalAction>& actions);

// Lift to SL: with t0 = -(sum of weights) mod n and g = gcd(N+1, t0), the
// weights k w + t modulo k n, where k = (N+1)/g and t = t0/g, sum to 0.
struct SlNormalized {
  DiagonalAction action;
  std::int64_t k = 1, t = 0;
};
SlNormalized sl_normalize(const DiagonalAction& a);

// The ideal is stable under the action: every graded piece of every
// generator lies in the ideal.
bool fixes_ideal(const Ideal& I, const DiagonalAction& a);

// p(images[0], ..., images[N])
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
// I under x -> images(x), as an ideal of the ring of the images
bool preserves_ideal(const Ideal& I, const std::vector<Polynomial>& images);

// For each swapped pair (i, j): x_i = (S + D)/2, x_j = (S - D)/2, so that
// S = x_i + x_j and D = x_i - x_j. New coordinates are ordered S_1, D_1,
// S_2, D_2, ..., then the fixed coordinates in the given order, and are named
// A, B, C, ... Generators are returned with integer coefficients, content 1.
Ideal plusminus_basis_change(const Ideal& I,
                             const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
                             const std::vector<std::size_t>& fixed);
// images of the coordinates of a permutation
std::vector<Polynomial> permutation_images(std::size_t nvars, const std::vector<std::size_t>& perm);

}  // namespace hs
