#pragma once

// Exact linear algebra over a field scalar. Matrices are stored as
// coordinate lists; elimination uses dense rows below 64x64 and sparse
// rows above.

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "equicobar/field.hpp"

namespace eqc {

template <FieldScalar F>
class Matrix {
 public:
  using Ctx = typename F::Ctx;
  using Entry = std::tuple<int, int, F>;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, Ctx ctx) : rows_(rows), cols_(cols), ctx_(ctx) {}

  static Matrix identity(int n, Ctx ctx) {
    Matrix m(n, n, ctx);
    for (int i = 0; i < n; ++i) m.add_entry(i, i, ctx.one());
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ctx& ctx() const { return ctx_; }
  const std::vector<Entry>& entries() const { return ents_; }

  void add_entry(int r, int c, const F& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InputError("matrix index out of range");
    if (!v.is_zero()) {
      ents_.emplace_back(r, c, v);
      canonical_ = false;
    }
  }

  void canonicalize() const {
    if (canonical_) return;
    auto& e = const_cast<Matrix*>(this)->ents_;
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
      return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
    });
    std::vector<Entry> out;
    out.reserve(e.size());
    for (auto& t : e) {
      if (!out.empty() && std::get<0>(out.back()) == std::get<0>(t) &&
          std::get<1>(out.back()) == std::get<1>(t)) {
        std::get<2>(out.back()) = std::get<2>(out.back()) + std::get<2>(t);
      } else {
        out.push_back(t);
      }
    }
    std::erase_if(out, [](const Entry& t) { return std::get<2>(t).is_zero(); });
    e = std::move(out);
    const_cast<Matrix*>(this)->canonical_ = true;
  }

  F at(int r, int c) const {
    canonicalize();
    auto it = std::lower_bound(ents_.begin(), ents_.end(), std::pair(r, c),
                               [](const Entry& t, const std::pair<int, int>& k) {
                                 return std::pair(std::get<0>(t), std::get<1>(t)) < k;
                               });
    if (it != ents_.end() && std::get<0>(*it) == r && std::get<1>(*it) == c) return std::get<2>(*it);
    return ctx_.zero();
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    canonicalize();
    o.canonicalize();
    return ents_ == o.ents_;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch");
    Matrix r(rows_, cols_, ctx_);
    r.ents_ = ents_;
    for (auto& t : o.ents_) r.ents_.push_back(t);
    r.canonical_ = false;
    r.canonicalize();
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_, ctx_);
    for (auto& [i, j, v] : ents_) r.add_entry(i, j, -v);
    return r;
  }
  Matrix operator-(const Matrix& o) const { return *this + (-o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix dimension mismatch in product");
    canonicalize();
    o.canonicalize();
    // rows of o, sparse
    std::vector<std::vector<std::pair<int, F>>> orow(o.rows_);
    for (auto& [i, j, v] : o.ents_) orow[i].emplace_back(j, v);
    Matrix r(rows_, o.cols_, ctx_);
    std::map<std::pair<int, int>, F> acc;
    for (auto& [i, j, v] : ents_) {
      for (auto& [jj, w] : orow[j]) {
        auto key = std::pair(i, jj);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, v * w);
        else
          it->second = it->second + v * w;
      }
    }
    for (auto& [k, v] : acc)
      if (!v.is_zero()) r.ents_.emplace_back(k.first, k.second, v);
    r.canonical_ = true;
    return r;
  }

  Matrix scaled(const F& s) const {
    Matrix r(rows_, cols_, ctx_);
    for (auto& [i, j, v] : ents_) r.add_entry(i, j, v * s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, ctx_);
    for (auto& [i, j, v] : ents_) r.add_entry(j, i, v);
    return r;
  }

  // Kronecker product (row-major flattening: (i,k) -> i*o.rows + k).
  Matrix kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, ctx_);
    for (auto& [i, j, v] : ents_)
      for (auto& [k, l, w] : o.ents_) r.add_entry(i * o.rows_ + k, j * o.cols_ + l, v * w);
    return r;
  }

  // stack vertically: [this; o]
  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw InputError("vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_, ctx_);
    for (auto& [i, j, v] : ents_) r.add_entry(i, j, v);
    for (auto& [i, j, v] : o.ents_) r.add_entry(i + rows_, j, v);
    return r;
  }
  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw InputError("hstack row mismatch");
    Matrix r(rows_, cols_ + o.cols_, ctx_);
    for (auto& [i, j, v] : ents_) r.add_entry(i, j, v);
    for (auto& [i, j, v] : o.ents_) r.add_entry(i, j + cols_, v);
    return r;
  }

  std::vector<F> column(int c) const {
    std::vector<F> v(rows_, ctx_.zero());
    canonicalize();
    for (auto& [i, j, x] : ents_)
      if (j == c) v[i] = x;
    return v;
  }

  static Matrix from_column(const std::vector<F>& v, Ctx ctx) {
    Matrix m(int(v.size()), 1, ctx);
    for (int i = 0; i < int(v.size()); ++i) m.add_entry(i, 0, v[i]);
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<F>>& cols, int rows, Ctx ctx) {
    Matrix m(rows, int(cols.size()), ctx);
    for (int c = 0; c < int(cols.size()); ++c)
      for (int r = 0; r < rows; ++r)
        if (!cols[c][r].is_zero()) m.add_entry(r, c, cols[c][r]);
    return m;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (int(v.size()) != cols_) throw InputError("apply: dimension mismatch");
    std::vector<F> r(rows_, ctx_.zero());
    canonicalize();
    for (auto& [i, j, x] : ents_)
      if (!v[j].is_zero()) r[i] = r[i] + x * v[j];
    return r;
  }

  bool is_zero() const {
    canonicalize();
    return ents_.empty();
  }

 private:
  int rows_, cols_;
  Ctx ctx_;
  std::vector<Entry> ents_;
  bool canonical_ = true;
};

// Result of a full row reduction of [M | Rhs].
template <FieldScalar F>
struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;               // one per pivot row, increasing
  std::vector<std::vector<std::pair<int, F>>> rows;      // RREF rows of M, sparse
  std::vector<std::vector<std::pair<int, F>>> rhs_rows;  // same row ops applied to Rhs
};

namespace lindetail {

template <FieldScalar F>
using SparseRow = std::vector<std::pair<int, F>>;

template <FieldScalar F>
SparseRow<F> axpy(const SparseRow<F>& a, const F& c, const SparseRow<F>& b) {
  // a + c*b, both sorted by column
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      F v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      F v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <FieldScalar F>
void scale_row(SparseRow<F>& r, const F& c) {
  for (auto& [j, v] : r) v = v * c;
}

}  // namespace lindetail

// Reduced row echelon form of [m | rhs]; rhs may have zero columns.
template <FieldScalar F>
Echelon<F> echelon(const Matrix<F>& m, const Matrix<F>& rhs) {
  using lindetail::axpy;
  using Row = lindetail::SparseRow<F>;
  if (rhs.rows() != m.rows() && rhs.cols() != 0) throw InputError("echelon rhs mismatch");
  m.canonicalize();
  rhs.canonicalize();
  const int nr = m.rows(), nc = m.cols(), rc = rhs.cols();
  const bool dense = nr < 64 && nc < 64;

  std::vector<Row> rows(nr), rrows(nr);
  if (dense) {
    // materialize dense rows as full sparse rows for uniform code, but with
    // positional access below
    std::vector<std::vector<F>> d(nr, std::vector<F>(nc, m.ctx().zero()));
    std::vector<std::vector<F>> dr(nr, std::vector<F>(rc, m.ctx().zero()));
    for (auto& [i, j, v] : m.entries()) d[i][j] = v;
    for (auto& [i, j, v] : rhs.entries()) dr[i][j] = v;
    Echelon<F> out;
    int prow = 0;
    for (int col = 0; col < nc && prow < nr; ++col) {
      int sel = -1;
      for (int r = prow; r < nr; ++r)
        if (!d[r][col].is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(d[sel], d[prow]);
      std::swap(dr[sel], dr[prow]);
      F piv_inv = d[prow][col].inv();
      for (auto& x : d[prow]) x = x * piv_inv;
      for (auto& x : dr[prow]) x = x * piv_inv;
      for (int r = 0; r < nr; ++r) {
        if (r == prow || d[r][col].is_zero()) continue;
        F c = -d[r][col];
        for (int j = col; j < nc; ++j) d[r][j] = d[r][j] + c * d[prow][j];
        for (int j = 0; j < rc; ++j) dr[r][j] = dr[r][j] + c * dr[prow][j];
      }
      out.pivot_cols.push_back(col);
      ++prow;
    }
    out.rank = prow;
    out.rows.resize(nr);
    out.rhs_rows.resize(nr);
    for (int r = 0; r < nr; ++r) {
      for (int j = 0; j < nc; ++j)
        if (!d[r][j].is_zero()) out.rows[r].emplace_back(j, d[r][j]);
      for (int j = 0; j < rc; ++j)
        if (!dr[r][j].is_zero()) out.rhs_rows[r].emplace_back(j, dr[r][j]);
    }
    return out;
  }

  for (auto& [i, j, v] : m.entries()) rows[i].emplace_back(j, v);
  for (auto& [i, j, v] : rhs.entries()) rrows[i].emplace_back(j, v);
  Echelon<F> out;
  int prow = 0;
  for (int col = 0; col < nc && prow < nr; ++col) {
    // pick the sparsest row with leading column == col
    int sel = -1;
    for (int r = prow; r < nr; ++r) {
      if (!rows[r].empty() && rows[r].front().first == col) {
        if (sel < 0 || rows[r].size() < rows[sel].size()) sel = r;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[prow]);
    std::swap(rrows[sel], rrows[prow]);
    F piv_inv = rows[prow].front().second.inv();
    lindetail::scale_row(rows[prow], piv_inv);
    lindetail::scale_row(rrows[prow], piv_inv);
    for (int r = 0; r < nr; ++r) {
      if (r == prow) continue;
      // find coefficient of col in row r
      F c = m.ctx().zero();
      for (auto& [j, v] : rows[r]) {
        if (j == col) {
          c = v;
          break;
        }
        if (j > col) break;
      }
      if (c.is_zero()) continue;
      c = -c;
      rows[r] = axpy(rows[r], c, rows[prow]);
      rrows[r] = axpy(rrows[r], c, rrows[prow]);
    }
    out.pivot_cols.push_back(col);
    ++prow;
  }
  out.rank = prow;
  out.rows = std::move(rows);
  out.rhs_rows = std::move(rrows);
  return out;
}

template <FieldScalar F>
int rank(const Matrix<F>& m) {
  return echelon(m, Matrix<F>(m.rows(), 0, m.ctx())).rank;
}

// Basis of the null space, as columns of a matrix.
template <FieldScalar F>
Matrix<F> kernel(const Matrix<F>& m) {
  auto e = echelon(m, Matrix<F>(m.rows(), 0, m.ctx()));
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), m.ctx().zero());
    v[free] = m.ctx().one();
    for (int r = 0; r < e.rank; ++r) {
      // row r: pivot at pivot_cols[r]; coefficient of `free` column
      for (auto& [j, val] : e.rows[r]) {
        if (j == free) {
          v[e.pivot_cols[r]] = -val;
          break;
        }
        if (j > free) break;
      }
    }
    basis.push_back(std::move(v));
  }
  return Matrix<F>::from_columns(basis, m.cols(), m.ctx());
}

// Column-space basis: the columns of m at the pivot positions.
template <FieldScalar F>
Matrix<F> column_space(const Matrix<F>& m) {
  auto e = echelon(m, Matrix<F>(m.rows(), 0, m.ctx()));
  std::vector<std::vector<F>> cols;
  for (int c : e.pivot_cols) cols.push_back(m.column(c));
  return Matrix<F>::from_columns(cols, m.rows(), m.ctx());
}

// Solve M X = B exactly; returns nullopt when inconsistent.
template <FieldScalar F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& b) {
  if (b.rows() != m.rows()) throw InputError("solve: dimension mismatch");
  auto e = echelon(m, b);
  // rows beyond rank must have zero rhs
  for (int r = e.rank; r < m.rows(); ++r)
    if (!e.rhs_rows[r].empty()) return std::nullopt;
  Matrix<F> x(m.cols(), b.cols(), m.ctx());
  for (int r = 0; r < e.rank; ++r)
    for (auto& [j, v] : e.rhs_rows[r]) x.add_entry(e.pivot_cols[r], j, v);
  return x;
}

// Do the columns of sub lie in the column space of space?
template <FieldScalar F>
bool subspace_contains(const Matrix<F>& space, const Matrix<F>& sub) {
  return solve(space, sub).has_value();
}

// A matrix Q whose kernel is exactly the column space of basis (the
// quotient projection onto a complement, used for subcoalgebra iteration).
template <FieldScalar F>
Matrix<F> cokernel_projection(const Matrix<F>& basis) {
  // kernel of basis^T gives the annihilator rows
  return kernel(basis.transpose()).transpose();
}

// dim of span of columns
template <FieldScalar F>
int column_rank(const Matrix<F>& m) {
  return rank(m);
}

// Extend the columns of `prefix` to a basis of the full space using
// candidate columns in order; returns column indices chosen from cand.
template <FieldScalar F>
std::vector<int> greedy_complete(const Matrix<F>& prefix, const Matrix<F>& cand) {
  Matrix<F> cur = prefix;
  int r = rank(cur);
  std::vector<int> chosen;
  for (int c = 0; c < cand.cols() && r < cand.rows(); ++c) {
    Matrix<F> trial = cur.hstack(Matrix<F>::from_columns({cand.column(c)}, cand.rows(), cand.ctx()));
    int nr = rank(trial);
    if (nr > r) {
      cur = trial;
      r = nr;
      chosen.push_back(c);
    }
  }
  return chosen;
}

}  // namespace eqc
