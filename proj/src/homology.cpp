#include "tropical/homology.hpp"

#include <algorithm>

namespace trop {

std::string to_string(Variant v) { return v == Variant::Standard ? "standard" : "bm"; }

std::string to_string(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    default: return "Z2";
  }
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

QMatrix column_q(const ZVec& v) {
  QMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

QMatrix column_q(const QVec& v) {
  QMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

}  // namespace

Orientation orient(const CellComplex& z, const ToricVariety& y) {
  Orientation o;
  for (int s = 0; s < z.size(); ++s) {
    const auto& sig = z.cells[s];
    const int d = sig.dim;
    QMatrix bs = to_rational(sig.tangent.basis());
    for (int t : z.facets[s]) {
      const auto& tau = z.cells[t];
      QMatrix bt = to_rational(tau.tangent.basis());
      std::optional<QMatrix> cu, ct;
      if (tau.cone == sig.cone) {
        QVec u(sig.point.size());
        for (size_t i = 0; i < u.size(); ++i) u[i] = tau.point[i] - sig.point[i];
        cu = solve_rational(bs, column_q(u));
        if (bt.cols() > 0) ct = solve_rational(bs, bt);
      } else {
        std::vector<int> extra;
        const auto& rr = y.cone_rays(sig.cone);
        for (int r : y.cone_rays(tau.cone))
          if (!std::binary_search(rr.begin(), rr.end(), r)) extra.push_back(r);
        if (extra.size() != 1)
          throw HomologyError("orientation: facet " + std::to_string(t) + " of " + std::to_string(s) +
                              " jumps more than one stratum");
        ZMatrix P = y.stratum(sig.cone).projection;
        ZVec u(P.rows());
        for (int i = 0; i < P.rows(); ++i)
          for (int j = 0; j < P.cols(); ++j) u[i] += P(i, j) * y.fan().rays[extra[0]][j];
        cu = solve_rational(bs, column_q(u));
        if (cu && bt.cols() > 0) {
          // lift the basis of tau along pi, normalised orthogonal to the outward vector
          QMatrix pb = to_rational(y.projection(sig.cone, tau.cone)) * bs;
          QMatrix sys = vconcat(pb, cu->transpose());
          QMatrix rhs = vconcat(bt, QMatrix(1, bt.cols()));
          ct = solve_rational(sys, rhs);
        }
      }
      if (bt.cols() == 0) ct = QMatrix(d, 0);
      if (!cu || !ct) throw HomologyError("orientation: tangent data of cells " + std::to_string(t) + " < " +
                                          std::to_string(s) + " inconsistent");
      QMatrix m = hconcat(*cu, *ct);
      if (m.rows() != d || m.cols() != d) throw HomologyError("orientation: dimension mismatch");
      int sg = sign_of(determinant(m));
      if (sg == 0) throw HomologyError("orientation: degenerate determinant at " + std::to_string(t));
      o.sign[{t, s}] = sg;
    }
  }
  return o;
}

long ChainComplex::euler_characteristic() const {
  long e = 0;
  for (size_t q = 0; q < dims.size(); ++q) e += (q % 2 ? -dims[q] : dims[q]);
  return e;
}

ChainComplex chain_complex(const CellComplex& z, const Orientation& o, const Cosheaf& g, Variant v, Ring r,
                           const std::vector<char>& mask) {
  ChainComplex c;
  c.variant = v;
  c.ring = r;
  const int top = std::max(0, z.max_dim());
  c.cells.assign(top + 1, {});
  c.dims.assign(top + 1, 0);
  auto included = [&](int i) {
    if (!mask.empty() && !mask[i]) return false;
    return v == Variant::BorelMoore || z.cells[i].compact;
  };
  for (int i = 0; i < z.size(); ++i) {
    if (!included(i)) continue;
    const int q = z.cells[i].dim;
    c.offset[i] = c.dims[q];
    c.dims[q] += g.rank(i);
    c.cells[q].push_back(i);
  }
  c.boundary.push_back(SparseZ(0, static_cast<int>(c.dims[0])));
  for (int q = 1; q <= top; ++q) {
    SparseZ d(static_cast<int>(c.dims[q - 1]), static_cast<int>(c.dims[q]));
    for (int s : c.cells[q])
      for (int t : z.facets[s]) {
        if (!included(t)) continue;
        const ZMatrix& m = g.map(t, s);
        const int sg = o(t, s);
        const long ro = c.offset.at(t), co = c.offset.at(s);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) d.add(static_cast<int>(ro + i), static_cast<int>(co + j), sg * m(i, j));
      }
    c.boundary.push_back(std::move(d));
  }
  for (int q = 2; q <= top; ++q)
    if (!(c.boundary[q - 1] * c.boundary[q]).is_zero())
      throw HomologyError("boundary squared is nonzero in degree " + std::to_string(q));
  return c;
}

namespace {

struct BoundaryInfo {
  long rank = 0;
  std::vector<Int> torsion;
};

BoundaryInfo analyse(const SparseZ& d, Ring r) {
  BoundaryInfo b;
  if (d.rows() == 0 || d.cols() == 0) return b;
  if (r == Ring::Z2) {
    b.rank = rank_mod2(d);
    return b;
  }
  auto f = sparse_invariant_factors(d);
  b.rank = static_cast<long>(f.size());
  if (r == Ring::Z)
    for (const auto& x : f)
      if (x > 1) b.torsion.push_back(x);
  return b;
}

std::vector<BoundaryInfo> analyse_all(const ChainComplex& c) {
  std::vector<BoundaryInfo> out;
  for (const auto& d : c.boundary) out.push_back(analyse(d, c.ring));
  out.push_back({});  // boundary out of the top degree
  return out;
}

}  // namespace

std::vector<HomologyRow> homology(const ChainComplex& c) {
  auto b = analyse_all(c);
  std::vector<HomologyRow> rows;
  for (int q = 0; q <= c.top(); ++q) {
    HomologyRow h;
    h.q = q;
    h.rank = c.dims[q] - b[q].rank - b[q + 1].rank;
    h.torsion = b[q + 1].torsion;
    rows.push_back(h);
  }
  return rows;
}

std::vector<HomologyRow> cohomology(const ChainComplex& c) {
  auto b = analyse_all(c);
  std::vector<HomologyRow> rows;
  for (int q = 0; q <= c.top(); ++q) {
    HomologyRow h;
    h.q = q;
    h.rank = c.dims[q] - b[q].rank - b[q + 1].rank;
    h.torsion = b[q].torsion;
    rows.push_back(h);
  }
  return rows;
}

std::string InducedMapRow::classification() const {
  if (injective && surjective) return "iso";
  if (surjective) return "surjective-only";
  if (injective) return "injective-only";
  return "neither";
}

namespace {

const SparseZ* at(const std::vector<SparseZ>& v, int q) {
  if (q < 0 || q >= static_cast<int>(v.size())) return nullptr;
  return &v[q];
}

long dim_at(const ChainComplex& c, int q) { return (q < 0 || q > c.top()) ? 0 : c.dims[q]; }

ZMatrix dense_or_empty(const SparseZ* s, long rows, long cols) {
  if (!s) return ZMatrix(static_cast<int>(rows), static_cast<int>(cols));
  return s->to_dense();
}

// basis of the cycles of a boundary map with the given domain dimension
ZMatrix cycle_basis(const SparseZ* d, long n) {
  if (!d || d->rows() == 0) return ZMatrix::identity(static_cast<int>(n));
  return kernel_lattice(d->to_dense()).basis();
}

bool lattice_surjective(const ChainComplex& a, const ChainComplex& b, const ChainMap& f, int q) {
  const long na = dim_at(a, q), nb = dim_at(b, q);
  ZMatrix ka = cycle_basis(at(a.boundary, q), na);
  ZMatrix fq = dense_or_empty(at(f.f, q), nb, na);
  ZMatrix gens = hconcat(fq * ka, dense_or_empty(at(b.boundary, q + 1), nb, dim_at(b, q + 1)));
  LatticeSubspace zb = LatticeSubspace::from_generators(cycle_basis(at(b.boundary, q), nb));
  return LatticeSubspace::from_generators(gens) == zb;
}

bool lattice_injective(const ChainComplex& a, const ChainComplex& b, const ChainMap& f, int q) {
  const long na = dim_at(a, q), nb = dim_at(b, q);
  ZMatrix ka = cycle_basis(at(a.boundary, q), na);
  ZMatrix fq = dense_or_empty(at(f.f, q), nb, na);
  ZMatrix db = dense_or_empty(at(b.boundary, q + 1), nb, dim_at(b, q + 1));
  ZMatrix sys = hconcat(fq * ka, -db);
  ZMatrix ker = kernel_lattice(sys).basis();
  ZMatrix c = ker.row_range(0, ka.cols());
  LatticeSubspace pre = LatticeSubspace::from_generators(ka * c);
  LatticeSubspace ba =
      LatticeSubspace::from_generators(dense_or_empty(at(a.boundary, q + 1), na, dim_at(a, q + 1)));
  return pre == ba;
}

}  // namespace

std::vector<InducedMapRow> induced_on_homology(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
  const int T = std::max(a.top(), b.top());
  for (int q = 1; q <= T; ++q) {
    const SparseZ* fa = at(f.f, q);
    const SparseZ* fl = at(f.f, q - 1);
    const SparseZ* da = at(a.boundary, q);
    const SparseZ* db = at(b.boundary, q);
    if (!fa || !fl || !da || !db) continue;
    if (!(*db * *fa == *fl * *da)) throw HomologyError("chain map does not commute in degree " + std::to_string(q));
  }
  // mapping cone: C_q = A_{q-1} + B_q
  std::vector<SparseZ> cone;
  std::vector<long> cdim;
  for (int q = 0; q <= T + 1; ++q) cdim.push_back(dim_at(a, q - 1) + dim_at(b, q));
  for (int q = 0; q <= T + 1; ++q) {
    const long a2 = dim_at(a, q - 2), b1 = dim_at(b, q - 1), a1 = dim_at(a, q - 1);
    SparseZ d(static_cast<int>(a2 + b1), static_cast<int>(cdim[q]));
    if (const SparseZ* da = at(a.boundary, q - 1); da && q - 1 >= 1)
      for (int j = 0; j < da->cols(); ++j)
        for (const auto& [i, v] : da->column(j)) d.add(i, j, -v);
    if (const SparseZ* fl = at(f.f, q - 1))
      for (int j = 0; j < fl->cols(); ++j)
        for (const auto& [i, v] : fl->column(j)) d.add(static_cast<int>(a2 + i), j, v);
    if (const SparseZ* db = at(b.boundary, q); db && q >= 1)
      for (int j = 0; j < db->cols(); ++j)
        for (const auto& [i, v] : db->column(j)) d.add(static_cast<int>(a2 + i), static_cast<int>(a1 + j), v);
    cone.push_back(std::move(d));
  }
  const Ring ring = a.ring;
  std::vector<BoundaryInfo> ci;
  for (const auto& d : cone) ci.push_back(analyse(d, ring));
  ci.push_back({});
  auto ha = homology(a), hb = homology(b);
  auto h_at = [](const std::vector<HomologyRow>& h, int q) -> const HomologyRow* {
    return (q < 0 || q >= static_cast<int>(h.size())) ? nullptr : &h[q];
  };
  auto rank_of_row = [&](const std::vector<HomologyRow>& h, int q) -> long {
    auto r = h_at(h, q);
    return r ? r->rank : 0;
  };
  std::vector<InducedMapRow> rows;
  long prev_rank = 0;
  bool prev_inj = true;
  for (int q = 0; q <= T; ++q) {
    InducedMapRow row;
    row.q = q;
    row.rank_source = rank_of_row(ha, q);
    row.rank_target = rank_of_row(hb, q);
    const long hc = cdim[q] - ci[q].rank - ci[q + 1].rank;
    const bool hc_zero = hc == 0 && ci[q + 1].torsion.empty();
    const long hc_next = cdim[q + 1] - ci[q + 1].rank - ci[q + 2].rank;
    const bool hc_next_zero = hc_next == 0 && ci[q + 2].torsion.empty();
    row.rank_image = row.rank_target + rank_of_row(ha, q - 1) - prev_rank - hc;
    if (ring != Ring::Z) {
      row.injective = row.rank_image == row.rank_source;
      row.surjective = row.rank_image == row.rank_target;
    } else {
      // coker f_q sits in H_q(cone) with quotient ker f_{q-1}; when that kernel is free
      // the torsion of the cone is the torsion of the cokernel
      const auto* prev_row = h_at(ha, q - 1);
      if (prev_inj)
        row.surjective = hc_zero;
      else if (row.rank_image < row.rank_target)
        row.surjective = false;
      else if (!prev_row || prev_row->torsion.empty())
        row.surjective = ci[q + 1].torsion.empty();
      else
        row.surjective = lattice_surjective(a, b, f, q);
      if (hc_next_zero)
        row.injective = true;
      else if (row.rank_image < row.rank_source)
        row.injective = false;
      else if (ha[q].torsion.empty())
        row.injective = true;
      else
        row.injective = lattice_injective(a, b, f, q);
    }
    prev_rank = row.rank_image;
    prev_inj = row.injective;
    rows.push_back(row);
  }
  return rows;
}

std::vector<InducedMapRow> induced_map(const HypersurfacePair& pair, int p, Variant v, Ring r) {
  if (v == Variant::Standard && is_cellular_pair(pair) != Tri::Yes)
    throw HomologyError("standard homology needs a cellular pair; use Borel-Moore chains");
  Cosheaf fx = multitangent(pair.X, pair.Y, p);
  Cosheaf fy = ambient_on_cells(pair.ambient, pair.Y, p);
  auto a = chain_complex(pair.X, orient(pair.X, pair.Y), fx, v, r);
  auto b = chain_complex(pair.ambient, orient(pair.ambient, pair.Y), fy, v, r);
  ChainMap f;
  for (int q = 0; q <= a.top(); ++q) {
    SparseZ m(static_cast<int>(dim_at(b, q)), static_cast<int>(a.dims[q]));
    for (int s : a.cells[q]) {
      const int amb = pair.x_to_ambient[s];
      auto inc = solve_in_lattice(fy.basis[amb], fx.basis[s]);
      if (!inc) throw HomologyError("stalk of X not inside the ambient stalk");
      const long ro = b.offset.at(amb), co = a.offset.at(s);
      for (int i = 0; i < inc->rows(); ++i)
        for (int j = 0; j < inc->cols(); ++j)
          if ((*inc)(i, j) != 0) m.add(static_cast<int>(ro + i), static_cast<int>(co + j), (*inc)(i, j));
    }
    f.f.push_back(std::move(m));
  }
  return induced_on_homology(a, b, f);
}

namespace {

std::string describe(const std::string& what, int p, int q, const HomologyRow& h) {
  std::string s = what + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " rank=" + std::to_string(h.rank);
  if (!h.torsion.empty()) {
    s += " torsion=[";
    for (size_t i = 0; i < h.torsion.size(); ++i) s += (i ? "," : "") + h.torsion[i].get_str();
    s += "]";
  }
  return s;
}

bool zero(const HomologyRow& h) { return h.rank == 0 && h.torsion.empty(); }

}  // namespace

VanishingReport verify_vanishing(const HypersurfacePair& pair, int p, bool include_standard) {
  VanishingReport rep;
  const int n = pair.Y.dim() - 1;
  const auto oy = orient(pair.ambient, pair.Y);
  const auto ox = orient(pair.X, pair.Y);
  auto Q = make_Q(pair, p);
  auto N = make_N(pair, p);
  std::vector<Variant> variants = {Variant::BorelMoore};
  if (include_standard) variants.push_back(Variant::Standard);
  for (Variant v : variants) {
    const std::string tag = to_string(v);
    auto hq = homology(chain_complex(pair.ambient, oy, Q.q, v, Ring::Z));
    for (const auto& h : hq)
      if (h.q < n + 1) {
        std::string d = describe("H_" + tag + "(Y;Q)", p, h.q, h);
        rep.checked.push_back(d);
        if (!zero(h)) rep.violations.push_back(d);
      }
    auto hn = homology(chain_complex(pair.X, ox, N.q, v, Ring::Z));
    for (const auto& h : hn)
      if (p + h.q <= n) {
        std::string d = describe("H_" + tag + "(X;N)", p, h.q, h);
        rep.checked.push_back(d);
        if (!zero(h)) rep.violations.push_back(d);
      }
  }
  // refinement vertices of a flat X are not faces of the dual structure
  for (int s = 0; s < pair.X.size() && newton_polytope_full(pair); ++s) {
    const auto& c = pair.X.cells[s];
    const int sed = pair.Y.cone_dim(c.cone);
    if (p <= n - c.dim - sed) {
      std::string d = "N stalk p=" + std::to_string(p) + " cell " + std::to_string(s) + " rank " +
                      std::to_string(N.q.rank(s));
      rep.checked.push_back(d);
      if (N.q.rank(s) != 0) rep.violations.push_back(d);
    }
  }
  for (int g = 0; g < pair.ambient.size(); ++g) {
    if (pair.ambient.cells[g].cone != 0) continue;
    std::vector<char> mask(pair.ambient.size(), 0);
    for (int c : pair.ambient.pieces[g]) mask[c] = 1;
    Cosheaf fg = gamma_cosheaf(pair, g, p);
    auto h = homology(chain_complex(pair.ambient, oy, fg, Variant::BorelMoore, Ring::Z, mask));
    for (const auto& row : h)
      if (row.q != pair.ambient.cells[g].dim) {
        std::string d = describe("H_bm(gamma " + std::to_string(g) + ")", p, row.q, row);
        rep.checked.push_back(d);
        if (!zero(row)) rep.violations.push_back(d);
      }
  }
  return rep;
}

}  // namespace trop
