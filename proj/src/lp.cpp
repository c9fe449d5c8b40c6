#include <algorithm>

#include "tropical/polyhedral.hpp"

namespace trop {

namespace {

struct Tableau {
  int m = 0;
  int n = 0;  // columns excluding rhs
  std::vector<QVec> t;
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = 0; j <= n; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule; returns false when unbounded.
  bool maximize(const QVec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        if (!allowed[j]) continue;
        Rat r = cost[j];
        for (int i = 0; i < m; ++i)
          if (t[i][j] != 0) r -= cost[basis[i]] * t[i][j];
        if (r > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][n] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const QVec& cost) const {
    Rat v = 0;
    for (int i = 0; i < m; ++i) v += cost[basis[i]] * t[i][n];
    return v;
  }
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  const int n = lp.n;
  std::vector<int> pos(n), neg(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    pos[j] = cols++;
    bool nn = !lp.nonneg.empty() && lp.nonneg[j];
    if (!nn) neg[j] = cols++;
  }
  const int n_ineq = static_cast<int>(lp.A.size());
  const int n_eq = static_cast<int>(lp.E.size());
  const int slack0 = cols;
  cols += n_ineq;
  const int art0 = cols;
  const int m = n_ineq + n_eq;
  cols += m;

  Tableau tab;
  tab.m = m;
  tab.n = cols;
  tab.t.assign(m, QVec(cols + 1));
  tab.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const QVec& row = i < n_ineq ? lp.A[i] : lp.E[i - n_ineq];
    Rat rhs = i < n_ineq ? lp.b[i] : lp.e[i - n_ineq];
    int sign = rhs < 0 ? -1 : 1;
    auto& tr = tab.t[i];
    for (int j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      tr[pos[j]] = sign * row[j];
      if (neg[j] >= 0) tr[neg[j]] = -sign * row[j];
    }
    if (i < n_ineq) tr[slack0 + i] = sign;
    tr[art0 + i] = 1;
    tr[cols] = sign * rhs;
    tab.basis[i] = art0 + i;
  }

  LPResult res;
  std::vector<bool> allowed(cols, true);
  QVec phase1(cols);
  for (int i = 0; i < m; ++i) phase1[art0 + i] = -1;
  tab.maximize(phase1, allowed);
  if (tab.objective(phase1) < 0) {
    res.status = LPResult::Infeasible;
    return res;
  }
  for (int i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < art0) continue;
    int c = -1;
    for (int j = 0; j < art0; ++j)
      if (tab.t[i][j] != 0) {
        c = j;
        break;
      }
    if (c >= 0) {
      tab.pivot(i, c);
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
      --tab.m;
      --i;
    }
  }
  for (int j = art0; j < cols; ++j) allowed[j] = false;
  QVec cost(cols);
  if (!lp.c.empty())
    for (int j = 0; j < n; ++j) {
      cost[pos[j]] = lp.c[j];
      if (neg[j] >= 0) cost[neg[j]] = -lp.c[j];
    }
  if (!tab.maximize(cost, allowed)) {
    res.status = LPResult::Unbounded;
    return res;
  }
  QVec val(cols);
  for (int i = 0; i < tab.m; ++i) val[tab.basis[i]] = tab.t[i][cols];
  res.status = LPResult::Optimal;
  res.x.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    res.x[j] = val[pos[j]];
    if (neg[j] >= 0) res.x[j] -= val[neg[j]];
  }
  res.value = 0;
  if (!lp.c.empty())
    for (int j = 0; j < n; ++j) res.value += lp.c[j] * res.x[j];
  return res;
}

bool lp_feasible(const LinearProgram& lp) {
  LinearProgram q = lp;
  q.c.clear();
  return solve_lp(q).status != LPResult::Infeasible;
}

}  // namespace trop
