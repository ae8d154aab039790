#include "jetdisc/matrix.hpp"

#include <utility>

#include "jetdisc/errors.hpp"

namespace jetdisc {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

namespace {

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Scalar matrix_determinant(const RationalMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  RationalMatrix m = input;
  Scalar prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<std::vector<Scalar>> solve_linear(const RationalMatrix& a, const std::vector<Scalar>& b,
                                                const std::vector<Scalar>& free_values) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length does not match row count");
  const std::size_t rows = a.rows(), cols = a.cols();
  RationalMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, p, r);
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;

  std::vector<Scalar> x(cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::size_t next_free = 0;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) x[c] = next_free < free_values.size() ? free_values[next_free++] : Scalar(0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    Scalar v = m(i, cols);
    for (std::size_t c = pivot_cols[i] + 1; c < cols; ++c)
      if (!is_pivot[c] && m(i, c) != 0) v -= m(i, c) * x[c];
    x[pivot_cols[i]] = v;
  }
  return x;
}

PolyMatrix::PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(vars_)) {}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (!(p.vars() == vars_)) throw VarSetMismatch("matrix entry over a different VarSet");
  data_[r * cols_ + c] = std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

RationalMatrix PolyMatrix::evaluate(const Point& point) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = jetdisc::evaluate((*this)(i, j), point);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.vars_ == b.vars_)) throw VarSetMismatch("variable-set mismatch in matrix product");
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
  PolyMatrix r(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Polynomial& x = a(i, k);
        const Polynomial& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      r.data_[i * r.cols_ + j] = std::move(s);
    }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.vars_ == b.vars_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Polynomial matrix_determinant(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const VarSet& vars = input.vars();
  if (n == 0) return Polynomial::constant(vars, 1);
  std::vector<Polynomial> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = input(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& { return m[i * n + j]; };
  Polynomial prev = Polynomial::constant(vars, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k).is_zero()) ++p;
    if (p == n) return Polynomial(vars);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw Error("Bareiss step produced an inexact division");
        at(i, j) = std::move(*q);
      }
      at(i, k) = Polynomial(vars);
    }
    prev = at(k, k);
  }
  Polynomial det = at(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

}  // namespace jetdisc
