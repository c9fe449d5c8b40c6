#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix col_range(int begin, int end) const {
    Matrix m(rows_, end - begin);
    for (int i = 0; i < rows_; ++i)
      for (int j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
    return m;
  }

  Matrix row_range(int begin, int end) const {
    Matrix m(end - begin, cols_);
    for (int i = begin; i < end; ++i)
      for (int j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
  }

  Matrix select_cols(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    return m;
  }

  Matrix select_rows(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(i), j) = (*this)(idx[i], j);
    return m;
  }

  std::vector<T> column(int j) const {
    std::vector<T> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  static Matrix from_columns(int rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    return m;
  }
  static Matrix from_rows(int cols, const std::vector<std::vector<T>>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

using ZMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

QMatrix to_rational(const ZMatrix& m);
std::string to_string(const ZMatrix& m);
std::string to_string(const ZVec& v);
std::string to_string(const QVec& v);

// H = M*U in column Hermite normal form: pivots positive, entries left of a
// pivot reduced into [0, pivot), zero columns at the right.
struct HermiteResult {
  ZMatrix H;
  ZMatrix U;
  int rank = 0;
};
HermiteResult hnf(const ZMatrix& m);

struct SmithDecomposition {
  ZMatrix U;
  ZMatrix V;
  ZMatrix D;
  int rank = 0;
  std::vector<Int> factors() const;
};
SmithDecomposition snf(const ZMatrix& m);

// Nonzero invariant factors in divisibility order, no transforms kept.
std::vector<Int> invariant_factors(ZMatrix m);

class LatticeSubspace {
 public:
  LatticeSubspace() = default;
  explicit LatticeSubspace(int ambient) : ambient_(ambient), basis_(ambient, 0) {}
  static LatticeSubspace from_generators(const ZMatrix& gens);
  static LatticeSubspace full(int ambient);

  int ambient() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const ZMatrix& basis() const { return basis_; }
  bool contains(const ZMatrix& vectors) const;
  bool operator==(const LatticeSubspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const LatticeSubspace& o) const { return !(*this == o); }

 private:
  int ambient_ = 0;
  ZMatrix basis_;
};

LatticeSubspace kernel_lattice(const ZMatrix& m);
LatticeSubspace lattice_sum(const LatticeSubspace& a, const LatticeSubspace& b);
LatticeSubspace saturate(const LatticeSubspace& a);

// Index subsets of {0..n-1} of size p in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int p);
Int binomial(long n, long k);
ZMatrix exterior_power(const ZMatrix& m, int p);

Int determinant(const ZMatrix& m);
Rat determinant(const QMatrix& m);
int rank_of(const ZMatrix& m);
int rank_of(const QMatrix& m);

// Integral X with B*X = V, where B is a LatticeSubspace basis (HNF); nullopt if
// some column of V is not in the lattice.
std::optional<ZMatrix> solve_in_lattice(const ZMatrix& hnf_basis, const ZMatrix& v);
// Unique rational solution of A*X = B for A of full column rank; nullopt if inconsistent.
std::optional<QMatrix> solve_rational(const QMatrix& a, const QMatrix& b);

ZVec primitive(const ZVec& v);
ZVec primitive(const QVec& v);
Int content(const ZVec& v);

struct HomologyGroup {
  long rank = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

// Homology at C_q of C_{q+1} --d_in--> C_q --d_out--> C_{q-1}.
HomologyGroup homology_at(const ZMatrix& d_in, const ZMatrix& d_out);

}  // namespace trop
