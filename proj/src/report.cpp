#include "tropical/report.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

namespace {

IntPoly y_minus_one_pow(int k) { return poly_pow({Int(-1), Int(1)}, k); }

// (-1)^c y^{-1} (y-1)^q [(y-1)^{m-q} - (-1)^{m-q}], c the codimension of the face in its polytope
IntPoly bounded_face_term(int m, int q, int c) {
  IntPoly bracket = y_minus_one_pow(m - q);
  if (bracket.empty()) bracket = {Int(0)};
  bracket[0] -= ((m - q) % 2 ? Int(-1) : Int(1));
  IntPoly full = poly_mul(y_minus_one_pow(q), poly_trim(bracket));
  if (c % 2)
    for (auto& x : full) x = -x;
  if (full.empty()) return {};
  if (full[0] != 0) throw ReportError("bounded face term does not cancel the y^-1 prefactor");
  return IntPoly(full.begin() + 1, full.end());
}

std::vector<int> support_face(const HypersurfacePair& pair, int rho) {
  const auto& Y = pair.Y;
  const auto& s = pair.subdivision;
  ZVec v(Y.dim());
  for (int r : Y.cone_rays(rho))
    for (int i = 0; i < Y.dim(); ++i) v[i] += Y.fan().rays[r][i];
  std::vector<Int> val;
  for (const auto& p : s.points) {
    Int d = 0;
    for (int i = 0; i < Y.dim(); ++i) d += v[i] * p[i];
    val.push_back(d);
  }
  const Int best = *std::max_element(val.begin(), val.end());
  std::vector<int> face;
  for (size_t i = 0; i < val.size(); ++i)
    if (val[i] == best) face.push_back(static_cast<int>(i));
  return face;
}

QVec to_q(const ZVec& v) { return QVec(v.begin(), v.end()); }

bool in_relative_interior(const QPolyhedron& p, const QVec& x) {
  if (!p.contains(x)) return false;
  for (const auto& f : p.facets()) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += Rat(f.normal[i]) * x[i];
    if (s == f.offset) return false;
  }
  return true;
}

long rank_of(const std::vector<HomologyRow>& rows, int q) {
  return (q < 0 || q >= static_cast<int>(rows.size())) ? 0 : rows[q].rank;
}

}  // namespace

IntPoly chi_y_from_homology(const HypersurfacePair& pair) {
  IntPoly out;
  const int top = pair.X.max_dim();
  if (top < 0) return out;
  auto o = orient(pair.X, pair.Y);
  for (int p = 0; p <= top; ++p) {
    auto c = chain_complex(pair.X, o, multitangent(pair.X, pair.Y, p), Variant::BorelMoore, Ring::Z);
    const long e = c.euler_characteristic();
    out.push_back(Int(p % 2 ? -e : e));
  }
  return poly_trim(out);
}

IntPoly chi_y_from_f_vector(const HypersurfacePair& pair) {
  if (!is_proper(pair)) throw ReportError("strata additivity needs X to meet the strata properly");
  if (!is_nonsingular(pair)) throw ReportError("bounded face counts need a non-singular hypersurface");
  const auto& s = pair.subdivision;
  IntPoly out;
  for (int rho = 0; rho < pair.Y.cone_count(); ++rho) {
    const int m = pair.Y.stratum_dim(rho);
    auto g = support_face(pair, rho);
    std::vector<QVec> gpts;
    for (int i : g) gpts.push_back(to_q(s.points[i]));
    QPolyhedron hull = convex_hull(gpts);
    const int gdim = hull.dim();
    for (const auto& F : s.faces) {
      if (F.dim < 1 || !std::includes(g.begin(), g.end(), F.points.begin(), F.points.end())) continue;
      QVec bary(s.ambient_dim, Rat(0));
      for (int i : F.points)
        for (int k = 0; k < s.ambient_dim; ++k) bary[k] += Rat(s.points[i][k]);
      for (auto& x : bary) x /= static_cast<long>(F.points.size());
      if (!in_relative_interior(hull, bary)) continue;
      out = poly_add(out, bounded_face_term(m, m - F.dim, gdim - F.dim));
    }
  }
  return out;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Int c = p[i];
    if (!out.empty()) out += (c < 0 ? " - " : " + ");
    else if (c < 0) out += "-";
    Int a = abs(c);
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

LatticePolytope standard_simplex(int n) {
  LatticePolytope p;
  p.ambient_dim = n;
  p.vertices.push_back(ZVec(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    ZVec e(n, Int(0));
    e[i] = 1;
    p.vertices.push_back(e);
  }
  return p;
}

LatticeCount lattice_point_oracle(const LatticePolytope& polytope, int dilation, long cap) {
  const int n = polytope.ambient_dim;
  std::vector<QVec> pts;
  std::vector<long> lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    lo[k] = hi[k] = polytope.vertices.at(0)[k].get_si() * dilation;
  }
  for (const auto& v : polytope.vertices) {
    QVec q(n);
    for (int k = 0; k < n; ++k) {
      const long x = v[k].get_si() * dilation;
      q[k] = x;
      lo[k] = std::min(lo[k], x);
      hi[k] = std::max(hi[k], x);
    }
    pts.push_back(q);
  }
  double candidates = 1;
  for (int k = 0; k < n; ++k) candidates *= static_cast<double>(hi[k] - lo[k] + 1);
  if (candidates > static_cast<double>(cap)) throw ReportError("lattice point enumeration exceeds the cap");
  QPolyhedron hull = convex_hull(pts);
  LatticeCount out;
  std::vector<long> x = lo;
  while (true) {
    QVec q(x.begin(), x.end());
    if (hull.contains(q)) {
      ++out.total;
      if (in_relative_interior(hull, q)) ++out.interior;
    }
    int k = 0;
    while (k < n && ++x[k] > hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

CellComplex toric_cell_complex(const ToricVariety& y) {
  std::vector<int> order(y.cone_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return y.stratum_dim(a) < y.stratum_dim(b); });
  std::vector<int> index(y.cone_count());
  for (size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  CellComplex z;
  z.ambient_dim = y.dim();
  for (int c : order) {
    Cell cell;
    cell.cone = c;
    cell.dim = y.stratum_dim(c);
    cell.compact = true;
    cell.origin = index[0];
    cell.key = {c};
    cell.point = QVec(cell.dim, Rat(0));
    cell.tangent = LatticeSubspace::full(cell.dim);
    z.cells.push_back(cell);
  }
  const int n = z.size();
  z.faces.assign(n, {});
  z.facets.assign(n, {});
  z.cofacets.assign(n, {});
  z.pieces.assign(n, {});
  for (int c : order) {
    const int s = index[c];
    for (int d : y.cofaces(c)) {
      if (d == c) continue;
      z.faces[s].push_back(index[d]);
      if (y.cone_dim(d) == y.cone_dim(c) + 1) {
        z.facets[s].push_back(index[d]);
        z.cofacets[index[d]].push_back(s);
      }
    }
    std::sort(z.faces[s].begin(), z.faces[s].end());
    std::sort(z.facets[s].begin(), z.facets[s].end());
  }
  for (auto& c : z.cofacets) std::sort(c.begin(), c.end());
  z.pieces[index[0]] = std::vector<int>(n);
  std::iota(z.pieces[index[0]].begin(), z.pieces[index[0]].end(), 0);
  return z;
}

ToricHomologyReport toric_homology_report(const ToricVariety& y) {
  ToricHomologyReport r;
  const int N = y.dim();
  if (!y.complete()) {
    r.violations.push_back("fan is not complete");
    return r;
  }
  r.f.assign(N + 1, 0);
  std::vector<long> cones(N + 1, 0);
  for (int c = 0; c < y.cone_count(); ++c) {
    ++r.f[y.stratum_dim(c)];
    ++cones[y.cone_dim(c)];
  }
  // h(t) = sum_k (#k-cones) (t-1)^{N-k}, h_p the coefficient of t^p
  IntPoly h;
  for (int k = 0; k <= N; ++k) {
    IntPoly term = y_minus_one_pow(N - k);
    for (auto& x : term) x *= cones[k];
    h = poly_add(h, term);
  }
  r.h.assign(N + 1, 0);
  for (size_t i = 0; i < h.size(); ++i) r.h[i] = h[i].get_si();
  for (int p = 0; p <= N; ++p) {
    Int s = 0;
    for (int q = 0; q <= N; ++q) s += (q % 2 ? -1 : 1) * binomial(q, p) * r.f[q];
    if (s != (p % 2 ? -r.h[p] : r.h[p]))
      r.violations.push_back("f/h identity fails at p=" + std::to_string(p));
  }
  CellComplex z = toric_cell_complex(y);
  Orientation o = orient(z, y);
  for (int p = 0; p <= N; ++p) {
    auto rows = homology(chain_complex(z, o, ambient_on_cells(z, y, p), Variant::Standard, Ring::Z));
    for (const auto& row : rows) {
      const long want = row.q == p ? r.h[p] : 0;
      if (row.rank != want)
        r.violations.push_back("rank H_" + std::to_string(row.q) + "(F_" + std::to_string(p) +
                               ") = " + std::to_string(row.rank) + ", expected " + std::to_string(want));
      if (!row.torsion.empty())
        r.violations.push_back("torsion in H_" + std::to_string(row.q) + "(F_" + std::to_string(p) + ")");
    }
    r.table.push_back(rows);
  }
  return r;
}

RankTable bm_rank_table(const HypersurfacePair& pair) {
  RankTable t;
  const int n = std::max(0, pair.X.max_dim());
  auto o = orient(pair.X, pair.Y);
  for (int p = 0; p <= n; ++p) {
    auto rows = homology(chain_complex(pair.X, o, multitangent(pair.X, pair.Y, p), Variant::BorelMoore, Ring::Z));
    std::vector<long> line(n + 1, 0);
    for (int q = 0; q <= n; ++q) line[q] = rank_of(rows, q);
    t.push_back(line);
  }
  return t;
}

RankTable hodge_table(const HypersurfacePair& pair) {
  if (!pair.Y.complete()) throw ReportError("hodge table needs a compact toric variety");
  if (!is_nonsingular(pair)) throw ReportError("hodge table needs a non-singular hypersurface");
  if (!is_combinatorially_ample(pair)) throw ReportError("hodge table needs a combinatorially ample hypersurface");
  RankTable t;
  const int n = std::max(0, pair.X.max_dim());
  auto o = orient(pair.X, pair.Y);
  for (int p = 0; p <= n; ++p) {
    auto rows = homology(chain_complex(pair.X, o, multitangent(pair.X, pair.Y, p), Variant::BorelMoore, Ring::Z));
    std::vector<long> line(n + 1, 0);
    for (int q = 0; q <= n; ++q) {
      if (q < static_cast<int>(rows.size()) && !rows[q].torsion.empty())
        throw ReportError("hodge table needs torsion-free homology; H_" + std::to_string(q) + "(F_" +
                          std::to_string(p) + ") has torsion");
      line[q] = rank_of(rows, q);
    }
    t.push_back(line);
  }
  return t;
}

RankPrediction torus_bm_prediction(const HypersurfacePair& pair) {
  RankPrediction r;
  if (!pair.Y.trivial()) r.violations.push_back("ambient is not R^{n+1}");
  if (!newton_polytope_full(pair)) r.violations.push_back("Newton polytope is not full-dimensional");
  if (!r.ok()) return r;
  r.table = bm_rank_table(pair);
  const int n = static_cast<int>(r.table.size()) - 1;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) continue;
      const long want = q == n ? binomial(n + 1, p + 1).get_si() : 0;
      if (r.table[p][q] != want)
        r.violations.push_back("rank H^BM_" + std::to_string(q) + "(F_" + std::to_string(p) + ") = " +
                               std::to_string(r.table[p][q]) + ", expected " + std::to_string(want));
    }
  return r;
}

RankPrediction affine_bm_prediction(const HypersurfacePair& pair) {
  RankPrediction r;
  int top = 0;
  for (int c = 0; c < pair.Y.cone_count(); ++c) top = std::max(top, pair.Y.cone_dim(c));
  if (!pair.Y.single_cone() || top != pair.Y.dim())
    r.violations.push_back("ambient is not a single full-dimensional cone");
  if (!newton_polytope_full(pair)) r.violations.push_back("Newton polytope is not full-dimensional");
  if (!r.ok()) return r;
  r.table = bm_rank_table(pair);
  const int n = static_cast<int>(r.table.size()) - 1;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n || (p == q && 2 * p > n)) continue;
      if (r.table[p][q] != 0)
        r.violations.push_back("rank H^BM_" + std::to_string(q) + "(F_" + std::to_string(p) + ") = " +
                               std::to_string(r.table[p][q]) + ", expected 0");
    }
  return r;
}

}  // namespace trop
