#pragma once
// Exact dense linear algebra over the rationals.

#include "hilbstab/polyring.hpp"

#include <optional>

namespace hs::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

struct RREF {
  Mat rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

RREF rref(Mat rows, std::size_t ncols);
std::size_t rank(Mat rows, std::size_t ncols);
// solves A x = b for square nonsingular A; nullopt when singular
std::optional<Vec> solve(Mat A, Vec b);
Rational determinant(Mat A);
// affine dimension of a point set
int affine_dimension(const std::vector<Vec>& points);

Rational dot(const Vec& a, const Vec& b);
// smallest positive integer multiple, content 1; zero vector stays zero
std::vector<Integer> primitive(const Vec& v);

}  // namespace hs::linalg
