#include "hilbstab/lp.hpp"

namespace hs {
namespace {

struct Tableau {
  std::size_t m = 0, n = 0;  // rows, structural columns; artificials follow
  std::vector<std::vector<Rational>> T;  // m x (n + m + 1), last column is the rhs
  std::vector<std::size_t> basis;
  std::vector<bool> alive;  // rows not dropped as redundant
  std::vector<Rational> d;  // reduced costs, size n + m

  std::size_t rhs() const { return n + m; }

  void reduced_costs(const std::vector<Rational>& cost) {
    d.assign(n + m, 0);
    for (std::size_t j = 0; j < n + m; ++j) d[j] = cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (!alive[i]) continue;
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n + m; ++j)
        if (T[i][j] != 0) d[j] -= cb * T[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / T[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= rhs(); ++k) {
      if (T[r][k] == 0) continue;
      T[r][k] *= inv;
      nz.push_back(k);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || !alive[i] || T[i][c] == 0) continue;
      Rational f = T[i][c];
      for (auto k : nz) T[i][k] -= f * T[r][k];
    }
    if (d[c] != 0) {
      Rational f = d[c];
      for (auto k : nz)
        if (k < n + m) d[k] -= f * T[r][k];
    }
    basis[r] = c;
  }

  // returns false when unbounded
  bool iterate(std::size_t allowed_cols) {
    while (true) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (d[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed_cols) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (!alive[i] || T[i][enter] <= 0) continue;
        Rational ratio = T[i][rhs()] / T[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  Tableau t;
  t.m = A.size();
  t.n = c.size();
  if (b.size() != t.m) throw Error("LP: rhs length mismatch");
  std::vector<int> sign(t.m, 1);
  t.T.assign(t.m, std::vector<Rational>(t.n + t.m + 1, 0));
  for (std::size_t i = 0; i < t.m; ++i) {
    if (A[i].size() != t.n) throw Error("LP: row length mismatch");
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < t.n; ++j) t.T[i][j] = sign[i] > 0 ? A[i][j] : Rational(-A[i][j]);
    t.T[i][t.n + i] = 1;
    t.T[i][t.rhs()] = sign[i] > 0 ? b[i] : Rational(-b[i]);
  }
  t.basis.resize(t.m);
  for (std::size_t i = 0; i < t.m; ++i) t.basis[i] = t.n + i;
  t.alive.assign(t.m, true);

  std::vector<Rational> cost1(t.n + t.m, 0);
  for (std::size_t i = 0; i < t.m; ++i) cost1[t.n + i] = 1;
  t.reduced_costs(cost1);
  t.iterate(t.n);

  LPResult res;
  Rational infeas = 0;
  for (std::size_t i = 0; i < t.m; ++i)
    if (t.basis[i] >= t.n) infeas += t.T[i][t.rhs()];
  if (infeas > 0) {
    res.status = LPStatus::infeasible;
    res.y.assign(t.m, 0);
    for (std::size_t i = 0; i < t.m; ++i) res.y[i] = (1 - t.d[t.n + i]) * sign[i];
    return res;
  }
  // drive zero-level artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < t.m; ++i) {
    if (t.basis[i] < t.n) continue;
    std::size_t j = 0;
    while (j < t.n && t.T[i][j] == 0) ++j;
    if (j < t.n) {
      t.pivot(i, j);
    } else {
      t.alive[i] = false;
    }
  }
  std::vector<Rational> cost2(t.n + t.m, 0);
  for (std::size_t j = 0; j < t.n; ++j) cost2[j] = c[j];
  t.reduced_costs(cost2);
  if (!t.iterate(t.n)) {
    res.status = LPStatus::unbounded;
    return res;
  }
  res.status = LPStatus::optimal;
  res.x.assign(t.n, 0);
  for (std::size_t i = 0; i < t.m; ++i)
    if (t.alive[i] && t.basis[i] < t.n) res.x[t.basis[i]] = t.T[i][t.rhs()];
  res.value = 0;
  for (std::size_t j = 0; j < t.n; ++j) res.value += c[j] * res.x[j];
  res.y.assign(t.m, 0);
  for (std::size_t i = 0; i < t.m; ++i)
    if (t.alive[i]) res.y[i] = -t.d[t.n + i] * sign[i];
  return res;
}

}  // namespace hs
