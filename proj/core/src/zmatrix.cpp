#include "schober/zmatrix.hpp"

#include "schober/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace schober {

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  ZMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw ParseError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("shape-mismatch", "matrix product");
  ZMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

ZMatrix ZMatrix::operator+(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("shape-mismatch", "matrix sum");
  ZMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

ZMatrix ZMatrix::operator-(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("shape-mismatch", "matrix difference");
  ZMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

ZMatrix ZMatrix::negate() const {
  ZMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

std::vector<std::int64_t> ZMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DomainError("dimension-mismatch", "matrix-vector product");
  std::vector<std::int64_t> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

bool ZMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool ZMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::vector<std::int64_t>> ZMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> rows(rows_);
  for (int i = 0; i < rows_; ++i) {
    rows[i].resize(cols_);
    for (int j = 0; j < cols_; ++j) rows[i][j] = at(i, j);
  }
  return rows;
}

std::int64_t det(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("shape-mismatch", "det of non-square");
  int n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Column-style Hermite reduction: returns (H, C) with m * C = H, C unimodular
// and H in lower column-echelon form. Used by kernels and integer solves.
struct ColumnHermite {
  ZMatrix h;
  ZMatrix c;
  std::vector<int> pivot_col_of_row; // -1 when the row has no pivot
  int rank = 0;
};

ColumnHermite column_hermite(const ZMatrix& m) {
  ColumnHermite res;
  res.h = m;
  res.c = ZMatrix::identity(m.cols());
  res.pivot_col_of_row.assign(m.rows(), -1);
  ZMatrix& h = res.h;
  ZMatrix& c = res.c;
  auto swap_cols = [&](int x, int y) {
    for (int r = 0; r < m.rows(); ++r) std::swap(h.at(r, x), h.at(r, y));
    for (int r = 0; r < m.cols(); ++r) std::swap(c.at(r, x), c.at(r, y));
  };
  auto axpy_col = [&](int dst, std::int64_t q, int src) { // col dst -= q * col src
    for (int r = 0; r < m.rows(); ++r) h.at(r, dst) -= q * h.at(r, src);
    for (int r = 0; r < m.cols(); ++r) c.at(r, dst) -= q * c.at(r, src);
  };
  int col = 0;
  for (int row = 0; row < m.rows() && col < m.cols(); ++row) {
    // gcd-eliminate everything right of `col` in this row
    for (int j = col + 1; j < m.cols(); ++j) {
      while (h.at(row, j) != 0) {
        if (h.at(row, col) != 0) axpy_col(j, h.at(row, j) / h.at(row, col), col);
        if (h.at(row, j) != 0) swap_cols(col, j);
      }
    }
    if (h.at(row, col) != 0) {
      if (h.at(row, col) < 0) {
        for (int r = 0; r < m.rows(); ++r) h.at(r, col) = -h.at(r, col);
        for (int r = 0; r < m.cols(); ++r) c.at(r, col) = -c.at(r, col);
      }
      res.pivot_col_of_row[row] = col;
      ++col;
    }
  }
  res.rank = col;
  return res;
}

} // namespace

int rank(const ZMatrix& m) { return column_hermite(m).rank; }

std::vector<std::vector<std::int64_t>> integer_kernel(const ZMatrix& m) {
  ColumnHermite ch = column_hermite(m);
  std::vector<std::vector<std::int64_t>> basis;
  for (int j = ch.rank; j < m.cols(); ++j) {
    std::vector<std::int64_t> v(m.cols());
    for (int i = 0; i < m.cols(); ++i) v[i] = ch.c.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IntegerSolve> solve_integer(const ZMatrix& m,
                                          const std::vector<std::int64_t>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DomainError("dimension-mismatch", "solve_integer rhs");
  ColumnHermite ch = column_hermite(m);
  // forward-substitute through the echelon columns; each column is zero above
  // its pivot row, so residual[row] is final when its row comes up
  std::vector<std::int64_t> residual = b;
  std::vector<std::int64_t> y(m.cols(), 0);
  for (int row = 0; row < m.rows(); ++row) {
    int col = ch.pivot_col_of_row[row];
    if (col < 0) {
      if (residual[row] != 0) return std::nullopt;
      continue;
    }
    std::int64_t piv = ch.h.at(row, col);
    if (residual[row] % piv != 0) return std::nullopt;
    std::int64_t q = residual[row] / piv;
    if (q != 0) {
      y[col] = q;
      for (int r = row; r < m.rows(); ++r) residual[r] -= q * ch.h.at(r, col);
    }
  }

  IntegerSolve out;
  out.particular.assign(m.cols(), 0);
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.particular[i] += ch.c.at(i, j) * y[j];
  out.kernel = integer_kernel(m);
  return out;
}

std::optional<ZMatrix> inverse_unimodular(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("shape-mismatch", "inverse of non-square");
  std::int64_t d = det(m);
  if (d != 1 && d != -1) return std::nullopt;
  int n = m.rows();
  // adjugate via cofactors; fine at the ranks this engine handles
  ZMatrix inv(n, n);
  if (n == 0) return inv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ZMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      std::int64_t cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = cof / d;
    }
  return inv;
}

} // namespace schober
