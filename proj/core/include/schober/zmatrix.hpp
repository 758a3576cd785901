#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace schober {

// Dense integer matrix with exact arithmetic. Everything downstream (K_0
// shadows, Euler forms, framing solves) works over Z; there is deliberately
// no floating point anywhere in this module.
class ZMatrix {
public:
  ZMatrix() = default;
  ZMatrix(int rows, int cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static ZMatrix identity(int n);
  static ZMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::int64_t& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const ZMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const ZMatrix& o) const { return !(*this == o); }

  ZMatrix transpose() const;
  ZMatrix operator*(const ZMatrix& o) const;
  ZMatrix operator+(const ZMatrix& o) const;
  ZMatrix operator-(const ZMatrix& o) const;
  ZMatrix negate() const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  bool is_identity() const;
  bool is_zero() const;

  std::vector<std::vector<std::int64_t>> to_rows() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Exact determinant (fraction-free Bareiss elimination).
std::int64_t det(const ZMatrix& m);

// Inverse over Z; present iff det = +-1.
std::optional<ZMatrix> inverse_unimodular(const ZMatrix& m);

// Basis of the integer kernel {x : m x = 0}, as columns.
std::vector<std::vector<std::int64_t>> integer_kernel(const ZMatrix& m);

// One integer solution of m x = b plus a kernel basis, or nullopt when the
// system has no integral solution. Column-style Hermite reduction.
struct IntegerSolve {
  std::vector<std::int64_t> particular;
  std::vector<std::vector<std::int64_t>> kernel;
};
std::optional<IntegerSolve> solve_integer(const ZMatrix& m,
                                          const std::vector<std::int64_t>& b);

int rank(const ZMatrix& m);

} // namespace schober
