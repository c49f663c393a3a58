#include "linalg.hpp"

namespace hs::linalg {

RREF rref(Mat rows, std::size_t ncols) {
  RREF out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < ncols; ++k)
      if (rows[r][k] != 0) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (rows[r][k] != 0) rows[i][k] -= f * rows[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(Mat rows, std::size_t ncols) { return rref(std::move(rows), ncols).pivots.size(); }

std::optional<Vec> solve(Mat A, Vec b) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  auto r = rref(std::move(A), n + 1);
  if (r.pivots.size() != n || r.pivots.back() != n - 1) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r.rows[i][n];
  return x;
}

Rational determinant(Mat A) {
  const std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(A[p], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[i][k] -= f * A[c][k];
    }
  }
  return det;
}

int affine_dimension(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vec d(points[0].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return int(rank(std::move(diffs), points[0].size()));
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Integer> primitive(const Vec& v) {
  Integer den = 1, g = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& x : v) {
    Integer k = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    out.push_back(k);
  }
  if (g != 0)
    for (auto& k : out) k /= g;
  return out;
}

}  // namespace hs::linalg
