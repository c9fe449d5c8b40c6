#include "tropical/sparse.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace trop {

void SparseZ::add(int i, int j, const Int& v) {
  if (v == 0) return;
  auto& col = data_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const auto& e, int r) { return e.first < r; });
  if (it != col.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {i, v});
  }
}

size_t SparseZ::nnz() const {
  size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

SparseZ SparseZ::transpose() const {
  SparseZ t(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : data_[j]) t.data_[i].push_back({j, v});
  return t;
}

ZMatrix SparseZ::to_dense() const {
  ZMatrix m(rows_, cols_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : data_[j]) m(i, j) = v;
  return m;
}

SparseZ SparseZ::from_dense(const ZMatrix& m) {
  SparseZ s(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) s.data_[j].push_back({i, m(i, j)});
  return s;
}

bool SparseZ::operator==(const SparseZ& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseZ operator*(const SparseZ& a, const SparseZ& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
  SparseZ c(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    std::map<int, Int> acc;
    for (const auto& [k, v] : b.column(j))
      for (const auto& [i, w] : a.column(k)) acc[i] += w * v;
    for (const auto& [i, v] : acc)
      if (v != 0) c.add(i, j, v);
  }
  return c;
}

SparseZ reduce_mod2(const SparseZ& m) {
  SparseZ r(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.column(j))
      if (mpz_odd_p(v.get_mpz_t())) r.add(i, j, 1);
  return r;
}

std::vector<Int> sparse_invariant_factors(const SparseZ& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::map<int, Int>> rows(R);
  std::vector<std::set<int>> cols(C);
  for (int j = 0; j < C; ++j)
    for (const auto& [i, v] : m.column(j)) {
      rows[i][j] = v;
      cols[j].insert(i);
    }
  long units = 0;
  for (;;) {
    int pr = -1, pc = -1;
    size_t best = SIZE_MAX;
    for (int c = 0; c < C && best > 0; ++c) {
      if (cols[c].empty()) continue;
      size_t cc = cols[c].size() - 1;
      for (int r : cols[c]) {
        const Int& v = rows[r].at(c);
        if (v != 1 && v != -1) continue;
        size_t cost = (rows[r].size() - 1) * cc;
        if (cost < best) {
          best = cost;
          pr = r;
          pc = c;
          if (cost == 0) break;
        }
      }
    }
    if (pr < 0) break;
    const Int pv = rows[pr].at(pc);
    std::vector<int> targets(cols[pc].begin(), cols[pc].end());
    for (int r : targets) {
      if (r == pr) continue;
      Int f = rows[r].at(pc) * pv;  // pv = +-1 so pv is its own inverse
      for (const auto& [c, v] : rows[pr]) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, -f * v);
          cols[c].insert(r);
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            rows[r].erase(it);
            cols[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : rows[pr]) cols[c].erase(pr);
    rows[pr].clear();
    ++units;
  }
  std::vector<int> live_rows, live_cols;
  std::vector<int> col_index(C, -1);
  for (int c = 0; c < C; ++c)
    if (!cols[c].empty()) {
      col_index[c] = static_cast<int>(live_cols.size());
      live_cols.push_back(c);
    }
  for (int r = 0; r < R; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  std::vector<Int> out(units, Int(1));
  if (!live_rows.empty()) {
    ZMatrix d(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) d(static_cast<int>(i), col_index[c]) = v;
    auto rest = invariant_factors(std::move(d));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

long rank_mod2(const SparseZ& m) {
  const int R = m.rows(), C = m.cols();
  const int words = (C + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(R, std::vector<uint64_t>(words, 0));
  for (int j = 0; j < C; ++j)
    for (const auto& [i, v] : m.column(j))
      if (mpz_odd_p(v.get_mpz_t())) rows[i][j / 64] ^= (uint64_t{1} << (j % 64));
  long rank = 0;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    const int w = c / 64;
    const uint64_t bit = uint64_t{1} << (c % 64);
    int s = -1;
    for (int i = r; i < R; ++i)
      if (rows[i][w] & bit) {
        s = i;
        break;
      }
    if (s < 0) continue;
    std::swap(rows[r], rows[s]);
    for (int i = r + 1; i < R; ++i)
      if (rows[i][w] & bit)
        for (int k = w; k < words; ++k) rows[i][k] ^= rows[r][k];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace trop
