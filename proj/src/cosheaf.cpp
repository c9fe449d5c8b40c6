#include "tropical/cosheaf.hpp"

#include <algorithm>

namespace trop {

const ZMatrix& Cosheaf::map(int tau, int sigma) const {
  auto it = maps.find({tau, sigma});
  if (it == maps.end()) throw std::out_of_range("cosheaf map not stored for this pair");
  return it->second;
}

long Cosheaf::total_rank() const {
  long s = 0;
  for (const auto& b : basis) s += b.cols();
  return s;
}

ZMatrix wedge_projection(const ToricVariety& y, int rho, int eta, int p) {
  if (rho == eta) return ZMatrix::identity(static_cast<int>(binomial(y.stratum_dim(rho), p).get_si()));
  return exterior_power(y.projection(rho, eta), p);
}

namespace {

std::vector<std::vector<int>> cofaces_of(const CellComplex& z) {
  std::vector<std::vector<int>> co(z.size());
  for (int s = 0; s < z.size(); ++s) {
    co[s].push_back(s);
    for (int t : z.faces[s]) co[t].push_back(s);
  }
  return co;
}

int wedge_dim(const ToricVariety& y, int cone, int p) {
  return static_cast<int>(binomial(y.stratum_dim(cone), p).get_si());
}

ZMatrix stalk_basis(const CellComplex& z, const ToricVariety& y, int p, int tau, const std::vector<int>& cofaces,
                    const std::vector<char>& mask) {
  const int cone = z.cells[tau].cone;
  ZMatrix gens(wedge_dim(y, cone, p), 0);
  for (int s : cofaces) {
    if (z.cells[s].cone != cone) continue;
    if (!mask.empty() && !mask[s]) continue;
    if (p > z.cells[s].dim) continue;
    gens = hconcat(gens, exterior_power(z.cells[s].tangent.basis(), p));
  }
  return LatticeSubspace::from_generators(gens).basis();
}

ZMatrix coords_in(const ZMatrix& basis, const ZMatrix& w, const std::string& what) {
  if (basis.cols() == 0) {
    if (!w.is_zero()) throw CosheafError(what + ": image does not land in a zero stalk");
    return ZMatrix(0, w.cols());
  }
  if (w.cols() == 0) return ZMatrix(basis.cols(), 0);
  auto x = solve_in_lattice(basis, w);
  if (!x) throw CosheafError(what + ": image does not land in the target stalk");
  return *x;
}

ZMatrix unimodular_inverse(const ZMatrix& u) {
  const int n = u.rows();
  auto inv = solve_rational(to_rational(u), QMatrix::identity(n));
  ZMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = (*inv)(i, j).get_num();
  return out;
}

}  // namespace

ZMatrix direct_map(const Cosheaf& f, const CellComplex& z, const ToricVariety& y, int gamma, int sigma) {
  const int rho = z.cells[sigma].cone, eta = z.cells[gamma].cone;
  ZMatrix w = wedge_projection(y, rho, eta, f.p) * f.basis[sigma];
  return coords_in(f.basis[gamma], w, "cell " + std::to_string(gamma) + " < " + std::to_string(sigma));
}

Cosheaf multitangent(const CellComplex& z, const ToricVariety& y, int p, const std::vector<char>& mask) {
  Cosheaf f;
  f.p = p;
  auto co = cofaces_of(z);
  for (int c = 0; c < z.size(); ++c) {
    if (!mask.empty() && !mask[c]) {
      f.basis.push_back(ZMatrix(wedge_dim(y, z.cells[c].cone, p), 0));
      continue;
    }
    f.basis.push_back(stalk_basis(z, y, p, c, co[c], mask));
  }
  for (int s = 0; s < z.size(); ++s)
    for (int t : z.facets[s]) {
      if (!mask.empty() && (!mask[s] || !mask[t])) continue;
      f.maps[{t, s}] = direct_map(f, z, y, t, s);
    }
  return f;
}

Cosheaf ambient_on_cells(const CellComplex& z, const ToricVariety& y, int p) {
  Cosheaf f;
  f.p = p;
  for (int c = 0; c < z.size(); ++c) f.basis.push_back(ZMatrix::identity(wedge_dim(y, z.cells[c].cone, p)));
  for (int s = 0; s < z.size(); ++s)
    for (int t : z.facets[s]) f.maps[{t, s}] = wedge_projection(y, z.cells[s].cone, z.cells[t].cone, p);
  return f;
}

Cosheaf restrict_cosheaf(const Cosheaf& f, const CellComplex& sub, const std::vector<int>& sub_to_full) {
  Cosheaf r;
  r.p = f.p;
  for (int c = 0; c < sub.size(); ++c) r.basis.push_back(f.basis[sub_to_full[c]]);
  for (int s = 0; s < sub.size(); ++s)
    for (int t : sub.facets[s]) r.maps[{t, s}] = f.map(sub_to_full[t], sub_to_full[s]);
  return r;
}

Cosheaf restrict_to_X(const Cosheaf& fy, const HypersurfacePair& pair) {
  return restrict_cosheaf(fy, pair.X, pair.x_to_ambient);
}

QuotientCosheaf quotient_cosheaf(const Cosheaf& big, const std::vector<ZMatrix>& small, const CellComplex& z) {
  QuotientCosheaf out;
  out.q.p = big.p;
  std::vector<ZMatrix> section;
  for (int c = 0; c < z.size(); ++c) {
    const int r = big.rank(c);
    ZMatrix a = coords_in(big.basis[c], small[c], "subcosheaf at cell " + std::to_string(c));
    out.inclusion.push_back(a);
    if (a.cols() == 0 || r == 0) {
      out.projection.push_back(ZMatrix::identity(r));
      section.push_back(ZMatrix::identity(r));
      out.q.basis.push_back(ZMatrix::identity(r));
      continue;
    }
    auto d = snf(a);
    if (d.rank != a.cols()) throw CosheafError("subcosheaf stalk at cell " + std::to_string(c) + " is not free");
    for (int i = 0; i < d.rank; ++i)
      if (d.D(i, i) != 1)
        throw CosheafError("quotient stalk at cell " + std::to_string(c) + " has torsion " + d.D(i, i).get_str());
    out.projection.push_back(d.U.row_range(d.rank, r));
    section.push_back(unimodular_inverse(d.U).col_range(d.rank, r));
    out.q.basis.push_back(ZMatrix::identity(r - d.rank));
  }
  for (int s = 0; s < z.size(); ++s)
    for (int t : z.facets[s]) out.q.maps[{t, s}] = out.projection[t] * big.map(t, s) * section[s];
  return out;
}

QuotientCosheaf make_Q(const HypersurfacePair& pair, int p) {
  Cosheaf fy = ambient_on_cells(pair.ambient, pair.Y, p);
  std::vector<ZMatrix> small;
  for (int c = 0; c < pair.ambient.size(); ++c)
    small.push_back(pair.ambient.cells[c].in_x ? fy.basis[c] : ZMatrix(fy.basis[c].rows(), 0));
  return quotient_cosheaf(fy, small, pair.ambient);
}

QuotientCosheaf make_N(const HypersurfacePair& pair, int p) {
  Cosheaf fyx = restrict_to_X(ambient_on_cells(pair.ambient, pair.Y, p), pair);
  Cosheaf fx = multitangent(pair.X, pair.Y, p);
  return quotient_cosheaf(fyx, fx.basis, pair.X);
}

Cosheaf gamma_cosheaf(const HypersurfacePair& pair, int gamma, int p) {
  std::vector<char> mask(pair.ambient.size(), 0);
  for (int c : pair.ambient.pieces[gamma]) mask[c] = 1;
  return multitangent(pair.ambient, pair.Y, p, mask);
}

IntPoly poly_trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(c);
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return poly_trim(c);
}

IntPoly poly_pow(const IntPoly& a, int k) {
  IntPoly r = {Int(1)};
  for (int i = 0; i < k; ++i) r = poly_mul(r, a);
  return r;
}

IntPoly stalk_rank_polynomial(const HypersurfacePair& pair, int x_cell) {
  const auto& X = pair.X;
  auto co = cofaces_of(X);
  const int m = pair.Y.stratum_dim(X.cells[x_cell].cone);
  IntPoly out(m + 1, Int(0));
  for (int p = 0; p <= m; ++p) {
    long r = stalk_basis(X, pair.Y, p, x_cell, co[x_cell], {}).cols();
    out[p] = (p % 2 ? -r : r);
  }
  return poly_trim(out);
}

IntPoly expected_stalk_polynomial(int m, int q) {
  IntPoly one_minus = {Int(1), Int(-1)};
  IntPoly minus_l = {Int(0), Int(-1)};
  IntPoly a = poly_pow(one_minus, m);
  IntPoly b = poly_mul(poly_pow(one_minus, q), poly_pow(minus_l, m - q));
  for (auto& x : b) x = -x;
  return poly_add(a, b);
}

}  // namespace trop
