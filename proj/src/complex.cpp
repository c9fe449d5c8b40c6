#include "tropical/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace trop {

int CellComplex::max_dim() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

std::vector<long> CellComplex::f_vector() const {
  std::vector<long> f(std::max(0, max_dim() + 1), 0);
  for (const auto& c : cells) ++f[c.dim];
  return f;
}

bool CellComplex::is_face(int tau, int sigma) const {
  if (tau == sigma) return true;
  const auto& fs = faces[sigma];
  return std::binary_search(fs.begin(), fs.end(), tau);
}

namespace {

struct Arrangement {
  std::vector<std::vector<Facet>> ineqs;
  std::vector<std::vector<Equation>> eqs;
};

void add_ineq(std::vector<Facet>& out, const ZVec& normal, const Rat& offset) {
  Int g = content(normal);
  if (g == 0) {
    if (offset < 0) out.push_back({normal, offset});  // infeasible marker, caught by empty()
    return;
  }
  out.push_back({primitive(normal), offset / Rat(g)});
}

// Closed dual cell of every subdivision face: the terms of the face tie and are maximal.
Arrangement dual_cells(const RegularSubdivision& s, int N) {
  Arrangement a;
  for (const auto& face : s.faces) {
    std::vector<Facet> ineq;
    std::vector<Equation> eq;
    const int a0 = face.points.front();
    std::vector<bool> on(s.points.size(), false);
    for (int i : face.points) on[i] = true;
    for (size_t b = 0; b < s.points.size(); ++b) {
      if (static_cast<int>(b) == a0) continue;
      ZVec n(N);
      for (int i = 0; i < N; ++i) n[i] = s.points[b][i] - s.points[a0][i];
      Rat off = s.heights[a0] - s.heights[b];
      if (on[b]) {
        Int g = content(n);
        eq.push_back({primitive(n), off / Rat(g)});
      } else {
        add_ineq(ineq, n, off);
      }
    }
    a.ineqs.push_back(std::move(ineq));
    a.eqs.push_back(std::move(eq));
  }
  return a;
}

std::vector<int> argmax_set(const RegularSubdivision& s, const QVec& x) {
  std::vector<Rat> val(s.points.size());
  for (size_t a = 0; a < s.points.size(); ++a) {
    Rat v = s.heights[a];
    for (size_t i = 0; i < x.size(); ++i) v += Rat(s.points[a][i]) * x[i];
    val[a] = v;
  }
  Rat m = *std::max_element(val.begin(), val.end());
  std::vector<int> out;
  for (size_t a = 0; a < val.size(); ++a)
    if (val[a] == m) out.push_back(static_cast<int>(a));
  return out;
}

QVec relint_point(const QPolyhedron& p) {
  QVec x(p.ambient_dim());
  for (const auto& v : p.vertices())
    for (size_t i = 0; i < x.size(); ++i) x[i] += v[i];
  for (auto& c : x) c /= Rat(static_cast<long>(p.vertices().size()));
  for (const auto& r : p.rays())
    for (size_t i = 0; i < x.size(); ++i) x[i] += r[i];
  return x;
}

LatticeSubspace tangent_of(const QPolyhedron& p) {
  const int m = p.ambient_dim();
  if (p.equations().empty()) return LatticeSubspace::full(m);
  ZMatrix e(static_cast<int>(p.equations().size()), m);
  for (size_t r = 0; r < p.equations().size(); ++r)
    for (int j = 0; j < m; ++j) e(static_cast<int>(r), j) = p.equations()[r].normal[j];
  return kernel_lattice(e);
}

bool same_set(const QPolyhedron& a, const QPolyhedron& b) {
  if (a.dim() != b.dim()) return false;
  auto inside = [](const QPolyhedron& p, const QPolyhedron& q) {
    for (const auto& v : p.vertices()) {
      if (!q.contains(v)) return false;
      auto shifted = [&](const ZVec& d, int sign) {
        QVec w = v;
        for (size_t i = 0; i < w.size(); ++i) w[i] += Rat(sign) * Rat(d[i]);
        return q.contains(w);
      };
      for (const auto& r : p.rays())
        if (!shifted(r, 1)) return false;
      for (const auto& l : p.lineality())
        if (!shifted(l, 1) || !shifted(l, -1)) return false;
    }
    return true;
  };
  return inside(a, b) && inside(b, a);
}

// Is the recession cone of a piece in Y_rho covered by the star of rho?
// The star cones cut C into a fan; C is covered iff every wall of that fan not
// lying on the boundary of C is shared by two pieces.
bool recession_covered(const QPolyhedron& piece, const ToricVariety& y, int rho) {
  if (piece.bounded()) return true;
  if (y.complete()) return true;
  const int m = y.stratum_dim(rho);
  QPolyhedron C = recession_cone(piece);
  const ZMatrix& P = y.stratum(rho).projection;
  const auto& rho_rays = y.cone_rays(rho);
  std::vector<QPolyhedron> parts;
  for (const auto& maxc : y.fan().cones) {
    if (!std::includes(maxc.begin(), maxc.end(), rho_rays.begin(), rho_rays.end())) continue;
    std::vector<ZVec> gens;
    for (int r : maxc) {
      if (std::binary_search(rho_rays.begin(), rho_rays.end(), r)) continue;
      ZVec w(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < y.dim(); ++j) w[i] += P(i, j) * y.fan().rays[r][j];
      gens.push_back(w);
    }
    auto K = QPolyhedron::from_vrep(m, {QVec(m)}, gens);
    auto D = intersect(C, K);
    if (!D.empty() && D.dim() == C.dim()) parts.push_back(D);
  }
  if (parts.empty()) return false;
  std::map<std::vector<ZVec>, int> walls;
  for (const auto& D : parts) {
    for (const auto& f : D.facets()) {
      std::vector<ZVec> on;
      for (const auto& r : D.rays()) {
        Int s = 0;
        for (int i = 0; i < m; ++i) s += f.normal[i] * r[i];
        if (s == 0) on.push_back(r);
      }
      std::sort(on.begin(), on.end());
      bool boundary = false;
      for (const auto& g : C.facets()) {
        bool all = true;
        for (const auto& r : on) {
          Int s = 0;
          for (int i = 0; i < m; ++i) s += g.normal[i] * r[i];
          if (s != 0) all = false;
        }
        if (all) boundary = true;
      }
      if (!boundary) ++walls[on];
    }
  }
  for (const auto& [k, n] : walls)
    if (n < 2) return false;
  return true;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

HypersurfacePair build_pair(const TropicalPolynomial& f_in, const FanSpec& fan, const BuildOptions& opt) {
  const int N = fan.dim;
  if (N < 1) throw BuildError("ambient dimension must be positive");
  if (N > opt.max_dim) throw BuildError("ambient dimension " + std::to_string(N) + " exceeds cap " +
                                        std::to_string(opt.max_dim));
  if (f_in.n_vars > N) throw BuildError("polynomial uses more variables than the fan dimension");
  if (f_in.terms.empty()) throw BuildError("empty polynomial");
  HypersurfacePair pair;
  pair.f = with_vars(f_in, N);
  pair.Y = ToricVariety(fan);

  auto subdivide = [&](const TropicalPolynomial& g) {
    std::vector<ZVec> pts;
    QVec h;
    for (const auto& t : g.terms) {
      pts.push_back(t.exponent);
      h.push_back(t.coefficient);
    }
    return regular_subdivision(pts, h);
  };
  pair.subdivision = subdivide(pair.f);
  std::vector<TropicalPolynomial> refiners = opt.refiners;
  if (opt.refine_lineality && pair.subdivision.dimension < N) {
    TropicalPolynomial g;
    g.n_vars = N;
    g.terms.push_back({ZVec(N), Rat(0)});
    for (int i = N - 1; i >= 0; --i) {
      ZVec e(N);
      e[i] = 1;
      g.terms.push_back({e, Rat(0)});
    }
    refiners.push_back(g);
    pair.lineality_refined = true;
  }
  for (const auto& g : refiners) pair.refiner_subdivisions.push_back(subdivide(with_vars(g, N)));

  std::vector<const RegularSubdivision*> subs = {&pair.subdivision};
  for (const auto& s : pair.refiner_subdivisions) subs.push_back(&s);
  std::vector<Arrangement> arr;
  for (const auto* s : subs) arr.push_back(dual_cells(*s, N));

  // sedentarity-0 cells: one per tuple of faces whose dual cells meet in the expected relint
  struct Base {
    std::vector<int> key;
    QPolyhedron geom;
    QVec point;
  };
  std::vector<Base> base;
  std::vector<int> idx(subs.size(), 0);
  while (true) {
    std::vector<Facet> ineq;
    std::vector<Equation> eq;
    for (size_t k = 0; k < subs.size(); ++k) {
      const auto& a = arr[k];
      ineq.insert(ineq.end(), a.ineqs[idx[k]].begin(), a.ineqs[idx[k]].end());
      eq.insert(eq.end(), a.eqs[idx[k]].begin(), a.eqs[idx[k]].end());
    }
    auto P = QPolyhedron::from_hrep(N, ineq, eq);
    if (!P.empty()) {
      QVec x = relint_point(P);
      bool ok = true;
      for (size_t k = 0; k < subs.size() && ok; ++k)
        ok = argmax_set(*subs[k], x) == subs[k]->faces[idx[k]].points;
      if (ok) base.push_back({idx, P, x});
    }
    size_t k = 0;
    while (k < subs.size() && ++idx[k] == static_cast<int>(subs[k]->faces.size())) idx[k++] = 0;
    if (k == subs.size()) break;
  }

  auto base_face = [&](int b, int a) {  // base[b] is a face of base[a]
    for (size_t k = 0; k < subs.size(); ++k)
      if (!subset_of(subs[k]->faces[base[a].key[k]].points, subs[k]->faces[base[b].key[k]].points)) return false;
    return true;
  };

  // pieces of each closure, one per cone met
  struct Piece {
    int base;
    int cone;
    QPolyhedron geom;
  };
  std::vector<Piece> pieces;
  for (size_t b = 0; b < base.size(); ++b)
    for (auto& [cone, g] : compactify(base[b].geom, pair.Y)) pieces.push_back({static_cast<int>(b), cone, g});

  // merge pieces of different origins that coincide as sets
  std::vector<int> rep(pieces.size());
  std::iota(rep.begin(), rep.end(), 0);
  {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (size_t i = 0; i < pieces.size(); ++i) groups[{pieces[i].cone, pieces[i].geom.dim()}].push_back(static_cast<int>(i));
    for (auto& [k, ids] : groups)
      for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < i; ++j)
          if (rep[ids[j]] == ids[j] && same_set(pieces[ids[i]].geom, pieces[ids[j]].geom)) {
            rep[ids[i]] = ids[j];
            break;
          }
  }

  std::vector<int> order;
  for (size_t i = 0; i < pieces.size(); ++i)
    if (rep[i] == static_cast<int>(i)) order.push_back(static_cast<int>(i));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& pa = pieces[a];
    const auto& pb = pieces[b];
    return std::make_tuple(pa.geom.dim(), pa.cone, base[pa.base].key) <
           std::make_tuple(pb.geom.dim(), pb.cone, base[pb.base].key);
  });
  std::vector<int> id_of_piece(pieces.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) id_of_piece[order[i]] = static_cast<int>(i);
  for (size_t i = 0; i < pieces.size(); ++i) id_of_piece[i] = id_of_piece[rep[i]];

  CellComplex& Z = pair.ambient;
  Z.ambient_dim = N;
  for (int pi : order) {
    const auto& p = pieces[pi];
    Cell c;
    c.cone = p.cone;
    c.dim = p.geom.dim();
    c.key = base[p.base].key;
    c.in_x = subs[0]->faces[c.key[0]].dim >= 1;
    c.geometry = p.geom;
    c.point = relint_point(p.geom);
    c.tangent = tangent_of(p.geom);
    c.compact = recession_covered(p.geom, pair.Y, p.cone);
    Z.cells.push_back(std::move(c));
  }
  const int n = Z.size();
  // origin: the sedentarity-0 cell of the representative piece
  std::vector<int> base_cell(base.size(), -1);
  for (size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].cone == 0) base_cell[pieces[i].base] = id_of_piece[i];
  for (int i = 0; i < n; ++i) Z.cells[i].origin = base_cell[pieces[order[i]].base];
  for (const auto& p : pieces)
    if (p.geom.dim() != base[p.base].geom.dim() - pair.Y.cone_dim(p.cone))
      pair.improper.push_back({base_cell[p.base], p.cone});
  Z.pieces.assign(n, {});
  for (size_t i = 0; i < pieces.size(); ++i) {
    auto& v = Z.pieces[base_cell[pieces[i].base]];
    v.push_back(id_of_piece[i]);
  }
  for (auto& v : Z.pieces) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // (b', rho') is a face of (b, rho) iff b' is a face of b and rho is a face of rho'
  std::vector<std::vector<char>> bface(base.size(), std::vector<char>(base.size(), 0));
  for (size_t a = 0; a < base.size(); ++a)
    for (size_t b = 0; b < base.size(); ++b) bface[b][a] = base_face(static_cast<int>(b), static_cast<int>(a));
  std::vector<std::set<int>> faces(n);
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = 0; j < pieces.size(); ++j) {
      if (!bface[pieces[j].base][pieces[i].base]) continue;
      if (!pair.Y.is_face(pieces[i].cone, pieces[j].cone)) continue;
      int a = id_of_piece[i], b = id_of_piece[j];
      if (a != b) faces[a].insert(b);
    }
  Z.faces.assign(n, {});
  Z.facets.assign(n, {});
  Z.cofacets.assign(n, {});
  for (int i = 0; i < n; ++i) {
    Z.faces[i].assign(faces[i].begin(), faces[i].end());
    for (int j : Z.faces[i]) {
      if (Z.cells[j].dim >= Z.cells[i].dim)
        throw BuildError("face of cell " + std::to_string(i) + " does not drop dimension");
      if (Z.cells[j].dim == Z.cells[i].dim - 1) {
        Z.facets[i].push_back(j);
        Z.cofacets[j].push_back(i);
      }
    }
  }

  // X as a subcomplex
  pair.ambient_to_x.assign(n, -1);
  for (int i = 0; i < n; ++i)
    if (Z.cells[i].in_x) {
      pair.ambient_to_x[i] = static_cast<int>(pair.x_to_ambient.size());
      pair.x_to_ambient.push_back(i);
    }
  CellComplex& X = pair.X;
  X.ambient_dim = N;
  const int nx = static_cast<int>(pair.x_to_ambient.size());
  X.faces.assign(nx, {});
  X.facets.assign(nx, {});
  X.cofacets.assign(nx, {});
  X.pieces.assign(nx, {});
  auto remap = [&](const std::vector<int>& v) {
    std::vector<int> out;
    for (int j : v)
      if (pair.ambient_to_x[j] >= 0) out.push_back(pair.ambient_to_x[j]);
    return out;
  };
  for (int i = 0; i < nx; ++i) {
    const int a = pair.x_to_ambient[i];
    Cell c = Z.cells[a];
    c.origin = pair.ambient_to_x[c.origin];
    X.cells.push_back(c);
    X.faces[i] = remap(Z.faces[a]);
    X.facets[i] = remap(Z.facets[a]);
    X.cofacets[i] = remap(Z.cofacets[a]);
    X.pieces[i] = remap(Z.pieces[a]);
  }
  return pair;
}

CellComplex dual_hypersurface(const TropicalPolynomial& f, const BuildOptions& opt) {
  return build_pair(f, trivial_fan(f.n_vars), opt).X;
}

bool newton_polytope_full(const HypersurfacePair& pair) { return pair.subdivision.dimension == pair.Y.dim(); }

GammaOpen gamma_open(const HypersurfacePair& pair, int gamma) {
  const auto& Z = pair.ambient;
  if (Z.cells[gamma].cone != 0) throw std::invalid_argument("gamma_open: cell has positive sedentarity");
  GammaOpen g;
  g.cells = Z.pieces[gamma];
  for (int c : g.cells) g.cones.push_back(Z.cells[c].cone);
  for (int c : g.cells) {
    bool below_all = true;
    for (int d : g.cells)
      if (!Z.is_face(c, d)) below_all = false;
    if (below_all) g.minimal = c;
  }
  return g;
}

bool is_proper(const HypersurfacePair& pair) { return pair.improper.empty(); }

bool is_nonsingular(const HypersurfacePair& pair) {
  const auto& s = pair.subdivision;
  const auto& Y = pair.Y;
  for (int rho = 0; rho < Y.cone_count(); ++rho) {
    ZVec v(Y.dim());
    for (int r : Y.cone_rays(rho))
      for (int i = 0; i < Y.dim(); ++i) v[i] += Y.fan().rays[r][i];
    std::vector<Int> val;
    for (const auto& p : s.points) {
      Int d = 0;
      for (int i = 0; i < Y.dim(); ++i) d += v[i] * p[i];
      val.push_back(d);
    }
    Int best = *std::max_element(val.begin(), val.end());
    std::vector<int> face;
    for (size_t i = 0; i < val.size(); ++i)
      if (val[i] == best) face.push_back(static_cast<int>(i));
    std::vector<const SubdivisionFace*> inside;
    for (const auto& F : s.faces)
      if (subset_of(F.points, face)) inside.push_back(&F);
    for (const auto* F : inside) {
      bool maximal = true;
      for (const auto* G : inside)
        if (G != F && subset_of(F->points, G->points)) maximal = false;
      if (!maximal) continue;
      std::vector<ZVec> pts;
      for (int i : F->points) pts.push_back(s.points[i]);
      if (!is_unimodular_simplex(pts)) return false;
    }
  }
  return true;
}

AmpleResult combinatorial_ampleness(const HypersurfacePair& pair) {
  const auto& Z = pair.ambient;
  const auto& Y = pair.Y;
  AmpleResult res;
  for (int g = 0; g < Z.size(); ++g) {
    if (Z.cells[g].cone != 0 || Z.cells[g].dim != Y.dim()) continue;
    std::set<int> cones;
    for (int c : Z.pieces[g]) cones.insert(Z.cells[c].cone);
    int top = 0;
    for (int c : cones)
      if (Y.cone_dim(c) > Y.cone_dim(top)) top = c;
    bool boolean = cones.size() == (size_t{1} << Y.cone_dim(top));
    for (int c : cones)
      if (!Y.is_face(c, top)) boolean = false;
    if (!boolean) {
      res.ample = false;
      res.failing.push_back(g);
    }
  }
  return res;
}

bool is_combinatorially_ample(const HypersurfacePair& pair) { return combinatorial_ampleness(pair).ample; }

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

Tri is_cellular_pair(const HypersurfacePair& pair) {
  for (const auto& c : pair.ambient.cells)
    if (!c.compact && !c.geometry.lineality().empty()) return Tri::No;
  if (!is_proper(pair)) return Tri::Unknown;
  for (const auto& c : pair.ambient.cells)
    if (!c.geometry.lineality().empty()) return Tri::Unknown;
  if (pair.Y.complete() || pair.Y.trivial()) return Tri::Yes;
  return Tri::Unknown;
}

std::string dump_complex(const CellComplex& c, const ToricVariety& y) {
  std::ostringstream os;
  os << "cells " << c.size() << "\n";
  for (int i = 0; i < c.size(); ++i) {
    const auto& cell = c.cells[i];
    os << "cell " << i << " dim " << cell.dim << " sed " << y.cone_dim(cell.cone) << " cone [";
    for (size_t k = 0; k < y.cone_rays(cell.cone).size(); ++k) os << (k ? " " : "") << y.cone_rays(cell.cone)[k];
    os << "] compact " << (cell.compact ? 1 : 0) << " x " << (cell.in_x ? 1 : 0) << "\n";
    for (const auto& v : cell.geometry.vertices()) os << "  vertex " << to_string(v) << "\n";
    for (const auto& r : cell.geometry.rays()) os << "  ray " << to_string(r) << "\n";
    for (const auto& l : cell.geometry.lineality()) os << "  line " << to_string(l) << "\n";
    os << "  tangent " << to_string(cell.tangent.basis()) << "\n";
  }
  for (int i = 0; i < c.size(); ++i)
    for (int j : c.facets[i]) os << "incidence " << j << " < " << i << "\n";
  return os.str();
}

}  // namespace trop
