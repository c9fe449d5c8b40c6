#include "tropical/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace trop {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

std::string to_string(const ZMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

std::string to_string(const ZVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// col_a <- s*col_a + t*col_b ; col_b <- u*col_a + v*col_b
void combine_cols(ZMatrix& m, int a, int b, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (int i = 0; i < m.rows(); ++i) {
    Int x = m(i, a), y = m(i, b);
    m(i, a) = s * x + t * y;
    m(i, b) = u * x + v * y;
  }
}


void add_col(ZMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void add_row(ZMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void negate_col(ZMatrix& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

void negate_row(ZMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteResult hnf(const ZMatrix& m) {
  const int R = m.rows(), C = m.cols();
  HermiteResult res{m, ZMatrix::identity(C), 0};
  ZMatrix& H = res.H;
  ZMatrix& U = res.U;
  int k = 0;
  for (int r = 0; r < R && k < C; ++r) {
    for (int j = k + 1; j < C; ++j) {
      if (H(r, j) == 0) continue;
      if (H(r, k) == 0) {
        H.swap_cols(k, j);
        U.swap_cols(k, j);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(r, k).get_mpz_t(), H(r, j).get_mpz_t());
      Int a = H(r, k) / g, b = H(r, j) / g;
      combine_cols(H, k, j, s, t, -b, a);
      combine_cols(U, k, j, s, t, -b, a);
    }
    if (H(r, k) == 0) continue;
    if (H(r, k) < 0) {
      negate_col(H, k);
      negate_col(U, k);
    }
    for (int j = 0; j < k; ++j) {
      Int q = floor_div(H(r, j), H(r, k));
      add_col(H, j, k, -q);
      add_col(U, j, k, -q);
    }
    ++k;
  }
  res.rank = k;
  return res;
}

std::vector<Int> SmithDecomposition::factors() const {
  std::vector<Int> f;
  for (int i = 0; i < rank; ++i) f.push_back(D(i, i));
  return f;
}

namespace {

// Shared SNF loop; U and V are updated only when non-null.
int smith_reduce(ZMatrix& D, ZMatrix* U, ZMatrix* V) {
  const int R = D.rows(), C = D.cols();
  int t = 0;
  while (t < R && t < C) {
    int pi = -1, pj = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    D.swap_rows(t, pi);
    if (U) U->swap_rows(t, pi);
    D.swap_cols(t, pj);
    if (V) V->swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Int q = floor_div(D(i, t), D(t, t));
        add_row(D, i, t, -q);
        if (U) add_row(*U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Int q = floor_div(D(t, j), D(t, t));
        add_col(D, j, t, -q);
        if (V) add_col(*V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        int bi = -1, bj = -1;
        for (int i = t + 1; i < R; ++i)
          if (D(i, t) != 0 && (bi < 0 || abs(D(i, t)) < abs(D(bi, t)))) bi = i;
        for (int j = t + 1; j < C; ++j)
          if (D(t, j) != 0 && (bj < 0 || abs(D(t, j)) < abs(D(t, bj)))) bj = j;
        if (bi >= 0 && (bj < 0 || abs(D(bi, t)) <= abs(D(t, bj)))) {
          D.swap_rows(t, bi);
          if (U) U->swap_rows(t, bi);
        } else {
          D.swap_cols(t, bj);
          if (V) V->swap_cols(t, bj);
        }
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, t, bad, 1);
      if (U) add_row(*U, t, bad, 1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      if (U) negate_row(*U, t);
    }
    ++t;
  }
  return t;
}

}  // namespace

SmithDecomposition snf(const ZMatrix& m) {
  SmithDecomposition s{ZMatrix::identity(m.rows()), ZMatrix::identity(m.cols()), m, 0};
  s.rank = smith_reduce(s.D, &s.U, &s.V);
  return s;
}

std::vector<Int> invariant_factors(ZMatrix m) {
  int r = smith_reduce(m, nullptr, nullptr);
  std::vector<Int> f;
  for (int i = 0; i < r; ++i) f.push_back(m(i, i));
  return f;
}

LatticeSubspace LatticeSubspace::from_generators(const ZMatrix& gens) {
  LatticeSubspace l;
  l.ambient_ = gens.rows();
  auto h = hnf(gens);
  l.basis_ = h.H.col_range(0, h.rank);
  return l;
}

LatticeSubspace LatticeSubspace::full(int ambient) {
  LatticeSubspace l;
  l.ambient_ = ambient;
  l.basis_ = ZMatrix::identity(ambient);
  return l;
}

bool LatticeSubspace::contains(const ZMatrix& vectors) const {
  return solve_in_lattice(basis_, vectors).has_value();
}

LatticeSubspace kernel_lattice(const ZMatrix& m) {
  auto h = hnf(m);
  return LatticeSubspace::from_generators(h.U.col_range(h.rank, m.cols()));
}

LatticeSubspace lattice_sum(const LatticeSubspace& a, const LatticeSubspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("lattice_sum: ambient mismatch");
  return LatticeSubspace::from_generators(hconcat(a.basis(), b.basis()));
}

LatticeSubspace saturate(const LatticeSubspace& a) {
  if (a.rank() == 0) return a;
  auto ann = kernel_lattice(a.basis().transpose());
  if (ann.rank() == 0) return LatticeSubspace::full(a.ambient());
  return kernel_lattice(ann.basis().transpose());
}

std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ZMatrix exterior_power(const ZMatrix& m, int p) {
  if (p < 0) return ZMatrix(0, 0);
  auto rs = subsets(m.rows(), p);
  auto cs = subsets(m.cols(), p);
  ZMatrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  ZMatrix sub(p, p);
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) {
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) sub(a, b) = m(rs[i][a], cs[j][b]);
      out(static_cast<int>(i), static_cast<int>(j)) = determinant(sub);
    }
  return out;
}

Int determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const int n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  QMatrix a = m;
  const int n = a.rows();
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    int s = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        s = i;
        break;
      }
    if (s < 0) return 0;
    if (s != k) {
      a.swap_rows(k, s);
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

int rank_of(const QMatrix& m) {
  QMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int s = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        s = i;
        break;
      }
    if (s < 0) continue;
    a.swap_rows(r, s);
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

int rank_of(const ZMatrix& m) { return rank_of(to_rational(m)); }

std::optional<ZMatrix> solve_in_lattice(const ZMatrix& b, const ZMatrix& v) {
  if (b.rows() != v.rows()) throw std::invalid_argument("solve_in_lattice: row mismatch");
  const int r = b.cols();
  std::vector<int> pivot(r, -1);
  int row = 0;
  for (int j = 0; j < r; ++j) {
    while (row < b.rows() && b(row, j) == 0) ++row;
    if (row == b.rows()) throw std::invalid_argument("solve_in_lattice: basis not in echelon form");
    pivot[j] = row;
    ++row;
  }
  ZMatrix x(r, v.cols());
  for (int c = 0; c < v.cols(); ++c) {
    for (int j = 0; j < r; ++j) {
      Int acc = v(pivot[j], c);
      for (int i = 0; i < j; ++i) acc -= b(pivot[j], i) * x(i, c);
      if (acc % b(pivot[j], j) != 0) return std::nullopt;
      x(j, c) = acc / b(pivot[j], j);
    }
    for (int i = 0; i < b.rows(); ++i) {
      Int acc = 0;
      for (int j = 0; j < r; ++j) acc += b(i, j) * x(j, c);
      if (acc != v(i, c)) return std::nullopt;
    }
  }
  return x;
}

std::optional<QMatrix> solve_rational(const QMatrix& a, const QMatrix& b) {
  const int R = a.rows(), C = a.cols();
  QMatrix aug = hconcat(a, b);
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int s = -1;
    for (int i = r; i < R; ++i)
      if (aug(i, c) != 0) {
        s = i;
        break;
      }
    if (s < 0) continue;
    aug.swap_rows(r, s);
    Rat inv = 1 / aug(r, c);
    for (int j = 0; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      Rat f = aug(i, c);
      for (int j = 0; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (r < C) throw std::invalid_argument("solve_rational: matrix lacks full column rank");
  for (int i = r; i < R; ++i)
    for (int j = C; j < aug.cols(); ++j)
      if (aug(i, j) != 0) return std::nullopt;
  QMatrix x(C, b.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, C + j);
  return x;
}

Int content(const ZVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZVec primitive(const ZVec& v) {
  Int g = content(v);
  if (g == 0) return v;
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

ZVec primitive(const QVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    z[i] = s.get_num();
  }
  return primitive(z);
}

HomologyGroup homology_at(const ZMatrix& d_in, const ZMatrix& d_out) {
  const int n = d_out.cols();
  if (d_in.rows() != n) throw std::invalid_argument("homology_at: shapes do not compose");
  if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero())
    throw std::invalid_argument("homology_at: d_out * d_in != 0");
  HomologyGroup h;
  ZMatrix kernel = d_out.rows() == 0 ? ZMatrix::identity(n) : kernel_lattice(d_out).basis();
  if (kernel.cols() == 0) return h;
  auto coords = solve_in_lattice(kernel, d_in);
  if (!coords) throw std::logic_error("homology_at: image not inside kernel");
  auto f = invariant_factors(*coords);
  h.rank = kernel.cols() - static_cast<long>(f.size());
  for (auto& x : f)
    if (x > 1) h.torsion.push_back(x);
  return h;
}

}  // namespace trop
