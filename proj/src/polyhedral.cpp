#include "tropical/polyhedral.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

namespace trop {

namespace {

using Bits = boost::dynamic_bitset<>;

Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const ZVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZMatrix rows_matrix(int dim, const std::vector<ZVec>& rows) {
  ZMatrix m(static_cast<int>(rows.size()), dim);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

std::vector<ZVec> columns_of(const ZMatrix& m) {
  std::vector<ZVec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

}  // namespace

ConeGenerators cone_generators(int dim, const std::vector<ZVec>& ineq, const std::vector<ZVec>& eq) {
  ConeGenerators out;
  std::vector<ZVec> all = ineq;
  all.insert(all.end(), eq.begin(), eq.end());
  LatticeSubspace lin = all.empty() ? LatticeSubspace::full(dim) : kernel_lattice(rows_matrix(dim, all));
  out.lineality = columns_of(lin.basis());

  std::vector<ZVec> comp_rows = eq;
  for (const auto& l : out.lineality) comp_rows.push_back(l);
  ZMatrix B = comp_rows.empty() ? ZMatrix::identity(dim) : kernel_lattice(rows_matrix(dim, comp_rows)).basis();
  const int w = B.cols();
  if (w == 0) return out;

  const int m = static_cast<int>(ineq.size());
  ZMatrix A = rows_matrix(dim, ineq) * B;
  std::vector<ZVec> arow(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < w; ++j) arow[i].push_back(A(i, j));

  std::vector<int> chosen;
  {
    QMatrix acc(0, w);
    for (int i = 0; i < m && static_cast<int>(chosen.size()) < w; ++i) {
      QMatrix trial = vconcat(acc, to_rational(A.row_range(i, i + 1)));
      if (rank_of(trial) > static_cast<int>(chosen.size())) {
        acc = trial;
        chosen.push_back(i);
      }
    }
  }
  if (static_cast<int>(chosen.size()) < w) throw std::logic_error("cone_generators: reduced cone not pointed");

  QMatrix AI(w, w);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) AI(i, j) = A(chosen[i], j);
  auto inv = solve_rational(AI, QMatrix::identity(w));
  std::vector<ZVec> rays;
  std::vector<Bits> zeros;
  std::vector<bool> processed(m, false);
  for (int i : chosen) processed[i] = true;
  for (int j = 0; j < w; ++j) {
    rays.push_back(primitive(inv->column(j)));
    Bits z(m);
    for (int i = 0; i < w; ++i)
      if (i != j) z.set(chosen[i]);
    zeros.push_back(z);
  }

  for (int k = 0; k < m; ++k) {
    if (processed[k]) continue;
    processed[k] = true;
    std::vector<Int> s(rays.size());
    std::vector<int> P, N, Z;
    for (size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(arow[k], rays[r]);
      if (s[r] > 0) P.push_back(static_cast<int>(r));
      else if (s[r] < 0) N.push_back(static_cast<int>(r));
      else Z.push_back(static_cast<int>(r));
    }
    if (N.empty()) {
      for (int r : Z) zeros[r].set(k);
      continue;
    }
    std::vector<ZVec> nrays;
    std::vector<Bits> nzeros;
    for (int p : P) {
      for (int q : N) {
        Bits common = zeros[p] & zeros[q];
        if (static_cast<int>(common.count()) < w - 2) continue;
        bool adjacent = true;
        for (size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (static_cast<int>(t) == p || static_cast<int>(t) == q) continue;
          if (common.is_subset_of(zeros[t])) adjacent = false;
        }
        if (!adjacent) continue;
        ZVec v(w);
        for (int j = 0; j < w; ++j) v[j] = s[p] * rays[q][j] - s[q] * rays[p][j];
        nrays.push_back(primitive(v));
        common.set(k);
        nzeros.push_back(common);
      }
    }
    std::vector<ZVec> kept;
    std::vector<Bits> kzeros;
    for (int p : P) {
      kept.push_back(rays[p]);
      kzeros.push_back(zeros[p]);
    }
    for (int r : Z) {
      kept.push_back(rays[r]);
      zeros[r].set(k);
      kzeros.push_back(zeros[r]);
    }
    for (size_t i = 0; i < nrays.size(); ++i) {
      kept.push_back(nrays[i]);
      kzeros.push_back(nzeros[i]);
    }
    rays = std::move(kept);
    zeros = std::move(kzeros);
  }

  for (const auto& r : rays) {
    ZVec v(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < w; ++j) v[i] += B(i, j) * r[j];
    out.rays.push_back(primitive(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

namespace {

ZVec homogenize(const QVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec z;
  z.push_back(l);
  for (const auto& x : v) {
    Rat s = x * l;
    z.push_back(s.get_num());
  }
  return primitive(z);
}

void hrep_of(int dim, const std::vector<QVec>& vertices, const std::vector<ZVec>& rays,
             const std::vector<ZVec>& lineality, std::vector<Facet>& facets, std::vector<Equation>& eqs) {
  std::vector<ZVec> gens;
  for (const auto& v : vertices) gens.push_back(homogenize(v));
  for (const auto& r : rays) {
    ZVec z{Int(0)};
    z.insert(z.end(), r.begin(), r.end());
    gens.push_back(z);
  }
  for (const auto& l : lineality) {
    ZVec z{Int(0)}, mz{Int(0)};
    for (const auto& x : l) {
      z.push_back(x);
      mz.push_back(-x);
    }
    gens.push_back(z);
    gens.push_back(mz);
  }
  auto polar = cone_generators(dim + 1, gens, {});
  for (const auto& h : polar.rays) {
    ZVec n(h.begin() + 1, h.end());
    bool zero = std::all_of(n.begin(), n.end(), [](const Int& x) { return x == 0; });
    if (zero) continue;
    for (auto& x : n) x = -x;
    Int g = content(n);
    Facet f;
    for (auto& x : n) x /= g;
    f.normal = n;
    f.offset = Rat(h[0], g);
    f.offset.canonicalize();
    facets.push_back(f);
  }
  for (const auto& l : polar.lineality) {
    ZVec n(l.begin() + 1, l.end());
    Int g = content(n);
    if (g == 0) continue;
    for (auto& x : n) x /= g;
    Equation e;
    e.normal = n;
    e.offset = Rat(-l[0], g);
    e.offset.canonicalize();
    eqs.push_back(e);
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
}

ZVec integer_row(const ZVec& normal, const Rat& offset, bool homog_first) {
  Int l = offset.get_den();
  ZVec z;
  Rat o = offset * l;
  if (homog_first) z.push_back(o.get_num());
  for (const auto& x : normal) z.push_back(x * l);
  return z;
}

void vrep_of(int dim, const std::vector<Facet>& facets, const std::vector<Equation>& eqs,
             std::vector<QVec>& vertices, std::vector<ZVec>& rays, std::vector<ZVec>& lineality) {
  // cone {(t,x) : t >= 0, t*offset - normal.x >= 0, normal.x - offset*t = 0}
  std::vector<ZVec> ineq, eq;
  ZVec t0(dim + 1);
  t0[0] = 1;
  ineq.push_back(t0);
  for (const auto& f : facets) {
    ZVec z = integer_row(f.normal, f.offset, true);
    for (size_t i = 1; i < z.size(); ++i) z[i] = -z[i];
    ineq.push_back(z);
  }
  for (const auto& e : eqs) {
    ZVec z = integer_row(e.normal, e.offset, true);
    z[0] = -z[0];
    eq.push_back(z);
  }
  auto g = cone_generators(dim + 1, ineq, eq);
  for (const auto& r : g.rays) {
    if (r[0] > 0) {
      QVec v(dim);
      for (int i = 0; i < dim; ++i) {
        v[i] = Rat(r[i + 1], r[0]);
        v[i].canonicalize();
      }
      vertices.push_back(v);
    } else {
      rays.push_back(primitive(ZVec(r.begin() + 1, r.end())));
    }
  }
  for (const auto& l : g.lineality) lineality.push_back(ZVec(l.begin() + 1, l.end()));
  std::sort(vertices.begin(), vertices.end());
  std::sort(rays.begin(), rays.end());
}

}  // namespace

QPolyhedron QPolyhedron::from_vrep(int dim, const std::vector<QVec>& vertices, const std::vector<ZVec>& rays,
                                   const std::vector<ZVec>& lineality) {
  QPolyhedron p;
  p.dim_ = dim;
  if (vertices.empty()) return p;
  hrep_of(dim, vertices, rays, lineality, p.facets_, p.equations_);
  vrep_of(dim, p.facets_, p.equations_, p.vertices_, p.rays_, p.lineality_);
  return p;
}

QPolyhedron QPolyhedron::from_hrep(int dim, const std::vector<Facet>& ineqs, const std::vector<Equation>& eqs) {
  std::vector<QVec> v;
  std::vector<ZVec> r, l;
  vrep_of(dim, ineqs, eqs, v, r, l);
  if (v.empty()) {
    QPolyhedron p;
    p.dim_ = dim;
    return p;
  }
  return from_vrep(dim, v, r, l);
}

int QPolyhedron::dim() const {
  if (vertices_.empty()) return -1;
  return dim_ - static_cast<int>(equations_.size());
}

bool QPolyhedron::contains(const QVec& x) const {
  if (vertices_.empty()) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

QPolyhedron convex_hull(const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point list");
  return QPolyhedron::from_vrep(static_cast<int>(points[0].size()), points, {});
}

QPolyhedron recession_cone(const QPolyhedron& p) {
  if (p.empty()) throw std::invalid_argument("recession_cone: empty polyhedron");
  return QPolyhedron::from_vrep(p.ambient_dim(), {QVec(p.ambient_dim())}, p.rays(), p.lineality());
}

QPolyhedron intersect(const QPolyhedron& a, const QPolyhedron& b) {
  if (a.empty() || b.empty()) return QPolyhedron::from_hrep(a.ambient_dim(), {}, {{ZVec(a.ambient_dim()), Rat(1)}});
  std::vector<Facet> f = a.facets();
  f.insert(f.end(), b.facets().begin(), b.facets().end());
  std::vector<Equation> e = a.equations();
  e.insert(e.end(), b.equations().begin(), b.equations().end());
  return QPolyhedron::from_hrep(a.ambient_dim(), f, e);
}

namespace {

// All nonempty faces generated by the given facet incidence sets, found level by
// level: the facets of a face G are the inclusion-maximal proper sets G & F_j.
// `valid` filters sets that do not correspond to a nonempty face.
template <class Valid>
std::vector<std::vector<int>> faces_from_facets(const std::vector<int>& top,
                                                const std::vector<std::vector<int>>& facet_sets,
                                                Valid valid) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out, frontier;
  seen.insert(top);
  out.push_back(top);
  frontier.push_back(top);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier) {
      std::vector<std::vector<int>> cands;
      for (const auto& f : facet_sets) {
        std::vector<int> c;
        std::set_intersection(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(c));
        if (c.size() == g.size() || !valid(c)) continue;
        cands.push_back(c);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; ++j) {
          if (i == j || cands[j].size() <= cands[i].size()) continue;
          if (std::includes(cands[j].begin(), cands[j].end(), cands[i].begin(), cands[i].end())) maximal = false;
        }
        if (maximal && seen.insert(cands[i]).second) {
          out.push_back(cands[i]);
          next.push_back(cands[i]);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

int affine_dimension_q(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  QMatrix m(static_cast<int>(pts.size()) - 1, static_cast<int>(pts[0].size()));
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < pts[0].size(); ++j) m(static_cast<int>(i) - 1, static_cast<int>(j)) = pts[i][j] - pts[0][j];
  return rank_of(m);
}

}  // namespace

std::vector<long> FaceLattice::f_vector() const {
  std::vector<long> f;
  for (const auto& face : faces) {
    if (face.dim >= static_cast<int>(f.size())) f.resize(face.dim + 1, 0);
    ++f[face.dim];
  }
  return f;
}

FaceLattice face_lattice(const QPolyhedron& p) {
  FaceLattice lat;
  if (p.empty()) return lat;
  const int nv = static_cast<int>(p.vertices().size());
  const int nr = static_cast<int>(p.rays().size());
  // generator indices: vertices 0..nv-1, rays nv..nv+nr-1
  std::vector<int> top(nv + nr);
  for (int i = 0; i < nv + nr; ++i) top[i] = i;
  std::vector<std::vector<int>> fsets;
  for (const auto& f : p.facets()) {
    std::vector<int> s;
    for (int i = 0; i < nv; ++i)
      if (dot(f.normal, p.vertices()[i]) == f.offset) s.push_back(i);
    for (int i = 0; i < nr; ++i)
      if (dot(f.normal, p.rays()[i]) == 0) s.push_back(nv + i);
    fsets.push_back(s);
  }
  auto sets = faces_from_facets(top, fsets, [nv](const std::vector<int>& s) { return !s.empty() && s[0] < nv; });
  const int lin = static_cast<int>(p.lineality().size());
  for (const auto& s : sets) {
    Face f;
    std::vector<QVec> pts;
    QVec base = p.vertices()[s[0]];
    for (int g : s) {
      if (g < nv) {
        f.vertices.push_back(g);
        pts.push_back(p.vertices()[g]);
      } else {
        f.rays.push_back(g - nv);
        QVec q = base;
        for (size_t j = 0; j < q.size(); ++j) q[j] += p.rays()[g - nv][j];
        pts.push_back(q);
      }
    }
    f.dim = affine_dimension_q(pts) + lin;
    lat.faces.push_back(f);
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.rays < b.rays;
  });
  lat.covers.assign(lat.faces.size(), {});
  for (size_t i = 0; i < lat.faces.size(); ++i)
    for (size_t j = 0; j < lat.faces.size(); ++j) {
      const auto& a = lat.faces[i];
      const auto& b = lat.faces[j];
      if (b.dim != a.dim + 1) continue;
      if (std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end()) &&
          std::includes(b.rays.begin(), b.rays.end(), a.rays.begin(), a.rays.end()))
        lat.covers[i].push_back(static_cast<int>(j));
    }
  return lat;
}

int affine_dimension(const std::vector<ZVec>& points) {
  std::vector<QVec> q;
  for (const auto& p : points) q.push_back(QVec(p.begin(), p.end()));
  return affine_dimension_q(q);
}

int RegularSubdivision::face_index(const std::vector<int>& pts) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), pts, [](const SubdivisionFace& f, const std::vector<int>& p) {
    return f.points < p;
  });
  if (it != faces.end() && it->points == pts) return static_cast<int>(it - faces.begin());
  return -1;
}

RegularSubdivision regular_subdivision(const std::vector<ZVec>& points, const QVec& heights) {
  if (points.empty() || points.size() != heights.size())
    throw std::invalid_argument("regular_subdivision: need one height per point");
  RegularSubdivision s;
  const int D = static_cast<int>(points[0].size());
  const int np = static_cast<int>(points.size());
  s.ambient_dim = D;
  s.points = points;
  s.heights = heights;
  s.dimension = affine_dimension(points);

  std::vector<QVec> lifted;
  for (int i = 0; i < np; ++i) {
    QVec q(points[i].begin(), points[i].end());
    q.push_back(heights[i]);
    lifted.push_back(q);
  }
  std::vector<int> all(np);
  for (int i = 0; i < np; ++i) all[i] = i;

  std::vector<std::vector<int>> sets;
  if (affine_dimension_q(lifted) == s.dimension) {
    std::vector<QVec> base;
    for (const auto& p : points) base.push_back(QVec(p.begin(), p.end()));
    auto hull = convex_hull(base);
    std::vector<std::vector<int>> fsets;
    for (const auto& f : hull.facets()) {
      std::vector<int> t;
      for (int i = 0; i < np; ++i)
        if (dot(f.normal, base[i]) == f.offset) t.push_back(i);
      fsets.push_back(t);
    }
    sets = faces_from_facets(all, fsets, [](const std::vector<int>& c) { return !c.empty(); });
  } else {
    auto hull = convex_hull(lifted);
    std::vector<std::vector<int>> fsets, upper;
    for (const auto& f : hull.facets()) {
      std::vector<int> t;
      for (int i = 0; i < np; ++i)
        if (dot(f.normal, lifted[i]) == f.offset) t.push_back(i);
      fsets.push_back(t);
      if (f.normal[D] > 0) upper.push_back(t);
    }
    std::set<std::vector<int>> acc;
    for (const auto& u : upper) {
      auto sub = faces_from_facets(u, fsets, [](const std::vector<int>& c) { return !c.empty(); });
      acc.insert(sub.begin(), sub.end());
    }
    sets.assign(acc.begin(), acc.end());
  }
  s.used.assign(np, false);
  for (const auto& t : sets) {
    SubdivisionFace f;
    f.points = t;
    std::vector<ZVec> pts;
    for (int i : t) {
      pts.push_back(points[i]);
      s.used[i] = true;
    }
    f.dim = affine_dimension(pts);
    s.faces.push_back(f);
  }
  std::sort(s.faces.begin(), s.faces.end(),
            [](const SubdivisionFace& a, const SubdivisionFace& b) { return a.points < b.points; });
  for (size_t i = 0; i < s.faces.size(); ++i)
    if (s.faces[i].dim == s.dimension) s.cells.push_back(static_cast<int>(i));
  return s;
}

bool is_unimodular_simplex(const std::vector<ZVec>& pts) {
  if (pts.empty()) return false;
  const int k = static_cast<int>(pts.size()) - 1;
  const int D = static_cast<int>(pts[0].size());
  if (k == 0) return true;
  ZMatrix m(D, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < D; ++i) m(i, j) = pts[j + 1][i] - pts[0][i];
  auto f = invariant_factors(m);
  if (static_cast<int>(f.size()) != k) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

bool is_primitive(const RegularSubdivision& s) {
  for (int c : s.cells) {
    const auto& f = s.faces[c];
    if (static_cast<int>(f.points.size()) != s.dimension + 1) return false;
    std::vector<ZVec> pts;
    for (int i : f.points) pts.push_back(s.points[i]);
    if (!is_unimodular_simplex(pts)) return false;
  }
  return true;
}

}  // namespace trop
