#pragma once

#include <cstddef>
#include <vector>

#include "jetdisc/poly_ops.hpp"
#include "jetdisc/polynomial.hpp"
#include "jetdisc/scalar.hpp"

namespace jetdisc {

/// Dense rows x cols matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const RationalMatrix& m);
/// Bareiss determinant; throws DomainError for non-square input.
Scalar matrix_determinant(const RationalMatrix& m);

/// One solution of A x = b, or nullopt when inconsistent. Free unknowns are
/// set from `free_values` in order (zero when exhausted).
std::optional<std::vector<Scalar>> solve_linear(const RationalMatrix& a, const std::vector<Scalar>& b,
                                                const std::vector<Scalar>& free_values = {});

/// Dense matrix of polynomials sharing one VarSet.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols);

  const VarSet& vars() const { return vars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Throws VarSetMismatch if p lives over a different VarSet.
  void set(std::size_t r, std::size_t c, Polynomial p);
  bool is_zero() const;

  RationalMatrix evaluate(const Point& point) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  VarSet vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Bareiss determinant over the polynomial ring (exact divisions).
Polynomial matrix_determinant(const PolyMatrix& m);

}  // namespace jetdisc
