#include "tropical/toric.hpp"

#include <algorithm>
#include <set>

namespace trop {

ToricVariety::ToricVariety(const FanSpec& fan) : fan_(fan) {
  std::set<std::vector<int>> all;
  all.insert(std::vector<int>{});
  for (const auto& c : fan_.cones) {
    const int k = static_cast<int>(c.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(c[i]);
      all.insert(s);
    }
  }
  cones_.assign(all.begin(), all.end());
  std::stable_sort(cones_.begin(), cones_.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() < b.size(); });
  for (size_t i = 0; i < cones_.size(); ++i) index_[cones_[i]] = static_cast<int>(i);

  const int N = fan_.dim;
  for (size_t c = 0; c < cones_.size(); ++c) {
    Stratum s;
    s.cone = static_cast<int>(c);
    const int k = static_cast<int>(cones_[c].size());
    if (k == 0) {
      s.projection = ZMatrix::identity(N);
      s.section = ZMatrix::identity(N);
    } else {
      ZMatrix R = ray_matrix(static_cast<int>(c));
      auto h = hnf(R.transpose());  // R^T U = [I 0], so U^T R = [I; 0]
      ZMatrix W = h.U.transpose();
      auto winv = solve_rational(to_rational(W), QMatrix::identity(N));
      ZMatrix Wi(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Wi(i, j) = (*winv)(i, j).get_num();
      s.projection = W.row_range(k, N);
      s.section = Wi.col_range(k, N);
    }
    strata_.push_back(s);
  }
}

int ToricVariety::find_cone(const std::vector<int>& rays) const {
  auto it = index_.find(rays);
  return it == index_.end() ? -1 : it->second;
}

bool ToricVariety::is_face(int rho, int eta) const {
  const auto& a = cones_[rho];
  const auto& b = cones_[eta];
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> ToricVariety::cofaces(int rho) const {
  std::vector<int> out;
  for (int c = 0; c < cone_count(); ++c)
    if (is_face(rho, c)) out.push_back(c);
  return out;
}

ZMatrix ToricVariety::ray_matrix(int c) const {
  const auto& r = cones_[c];
  ZMatrix m(dim(), static_cast<int>(r.size()));
  for (size_t j = 0; j < r.size(); ++j)
    for (int i = 0; i < dim(); ++i) m(i, static_cast<int>(j)) = fan_.rays[r[j]][i];
  return m;
}

ZMatrix ToricVariety::projection(int rho, int eta) const {
  if (!is_face(rho, eta)) throw std::invalid_argument("projection: cone is not a face");
  return strata_[eta].projection * strata_[rho].section;
}

bool ToricVariety::complete() const {
  const int N = dim();
  if (fan_.cones.empty()) return N == 0;
  for (const auto& c : fan_.cones)
    if (static_cast<int>(c.size()) != N) return false;
  for (int c = 0; c < cone_count(); ++c) {
    if (cone_dim(c) != N - 1) continue;
    int count = 0;
    for (const auto& m : fan_.cones)
      if (std::includes(m.begin(), m.end(), cones_[c].begin(), cones_[c].end())) ++count;
    if (count != 2) return false;
  }
  return true;
}

bool cone_meets_relint(int dim, const std::vector<ZVec>& ineq, const std::vector<ZVec>& eq,
                       const std::vector<ZVec>& rays) {
  const int k = static_cast<int>(rays.size());
  // quick accept: the sum of the rays
  ZVec s(dim);
  for (const auto& r : rays)
    for (int i = 0; i < dim; ++i) s[i] += r[i];
  auto ok = [&](const ZVec& v) {
    for (const auto& a : eq) {
      Int d = 0;
      for (int i = 0; i < dim; ++i) d += a[i] * v[i];
      if (d != 0) return false;
    }
    for (const auto& a : ineq) {
      Int d = 0;
      for (int i = 0; i < dim; ++i) d += a[i] * v[i];
      if (d > 0) return false;
    }
    return true;
  };
  if (ok(s)) return true;
  if (k == 0) return false;
  // v = R (1 + mu), mu >= 0
  LinearProgram lp;
  lp.n = k;
  lp.nonneg.assign(k, true);
  auto row_of = [&](const ZVec& a, Rat& shift) {
    QVec row(k);
    shift = 0;
    for (int j = 0; j < k; ++j) {
      Int d = 0;
      for (int i = 0; i < dim; ++i) d += a[i] * rays[j][i];
      row[j] = d;
      shift += d;
    }
    return row;
  };
  for (const auto& a : eq) {
    Rat shift;
    lp.E.push_back(row_of(a, shift));
    lp.e.push_back(-shift);
  }
  for (const auto& a : ineq) {
    Rat shift;
    lp.A.push_back(row_of(a, shift));
    lp.b.push_back(-shift);
  }
  return lp_feasible(lp);
}

std::map<int, QPolyhedron> compactify(const QPolyhedron& p, const ToricVariety& y) {
  std::map<int, QPolyhedron> out;
  if (p.empty()) return out;
  std::vector<ZVec> ineq, eq;
  for (const auto& f : p.facets()) ineq.push_back(f.normal);
  for (const auto& e : p.equations()) eq.push_back(e.normal);
  for (int c = 0; c < y.cone_count(); ++c) {
    std::vector<ZVec> rays;
    for (int r : y.cone_rays(c)) rays.push_back(y.fan().rays[r]);
    if (!cone_meets_relint(y.dim(), ineq, eq, rays)) continue;
    const ZMatrix& P = y.stratum(c).projection;
    const int m = P.rows();
    auto apply_q = [&](const QVec& v) {
      QVec w(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < y.dim(); ++j) w[i] += P(i, j) * v[j];
      return w;
    };
    auto apply_z = [&](const ZVec& v) {
      ZVec w(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < y.dim(); ++j) w[i] += P(i, j) * v[j];
      return w;
    };
    auto nonzero = [](const ZVec& v) {
      return std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    };
    std::vector<QVec> verts;
    std::vector<ZVec> rs, lin;
    for (const auto& v : p.vertices()) verts.push_back(apply_q(v));
    for (const auto& r : p.rays()) {
      ZVec w = apply_z(r);
      if (nonzero(w)) rs.push_back(primitive(w));
    }
    for (const auto& l : p.lineality()) {
      ZVec w = apply_z(l);
      if (nonzero(w)) lin.push_back(w);
    }
    if (m == 0) verts = {QVec()};
    out.emplace(c, QPolyhedron::from_vrep(m, verts, rs, lin));
  }
  return out;
}

}  // namespace trop
