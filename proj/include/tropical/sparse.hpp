#pragma once

#include <utility>
#include <vector>

#include "tropical/linalg.hpp"

namespace trop {

// Column-major sparse integer matrix; each column holds (row, value) pairs
// sorted by row with no zero values.
class SparseZ {
 public:
  using Column = std::vector<std::pair<int, Int>>;

  SparseZ() = default;
  SparseZ(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Column& column(int j) const { return data_[j]; }
  void add(int i, int j, const Int& v);  // accumulates
  size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  SparseZ transpose() const;
  ZMatrix to_dense() const;
  static SparseZ from_dense(const ZMatrix& m);
  bool operator==(const SparseZ& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Column> data_;
};

SparseZ operator*(const SparseZ& a, const SparseZ& b);

// Nonzero invariant factors (sorted by divisibility). Unit pivots are
// eliminated sparsely, the remainder goes through dense SNF.
std::vector<Int> sparse_invariant_factors(const SparseZ& m);
long rank_mod2(const SparseZ& m);
SparseZ reduce_mod2(const SparseZ& m);

}  // namespace trop
