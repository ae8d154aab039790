#pragma once

#include <climits>
#include <span>
#include <string_view>
#include <vector>

#include "jetdisc/monomial.hpp"
#include "jetdisc/scalar.hpp"
#include "jetdisc/var_set.hpp"

namespace jetdisc {

struct Term {
  Monomial monomial;
  Scalar coef;
};

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroDegree = INT_MIN;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in descending graded reverse lexicographic order and no
/// stored coefficient is zero, so two equal polynomials over the same VarSet
/// have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}
  /// Sorts, merges like terms and drops zero coefficients.
  Polynomial(VarSet vars, std::vector<Term> terms);

  static Polynomial constant(const VarSet& vars, const Scalar& value);
  static Polynomial variable(const VarSet& vars, std::string_view name);
  static Polynomial monomial(const VarSet& vars, const Monomial& m, const Scalar& coef = 1);

  const VarSet& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kZeroDegree for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  /// Total degree counted only in the given variables.
  int degree_in(std::span<const std::size_t> vars) const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  /// Grevlex-leading term. Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  /// Indices of variables appearing with positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial pow(unsigned exp) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_vars(const Polynomial& other, const char* op) const;

  VarSet vars_;
  std::vector<Term> terms_;
};

}  // namespace jetdisc
