#pragma once

#include <span>
#include <string>
#include <vector>

#include "jetdisc/multi_index.hpp"
#include "jetdisc/poly_ops.hpp"
#include "jetdisc/polynomial.hpp"

namespace jetdisc {

/// A variable u together with the formal differential du that shifts it.
struct ShiftVar {
  std::string var;
  std::string differential;
};

/// Pairs each name v with `d<v>`.
std::vector<ShiftVar> default_differentials(std::span<const std::string> vars);

/// (1/I!) * d^I f / d vars^I, where I[j] applies to vars[j].
Polynomial scaled_partial(const Polynomial& f, std::span<const std::string> vars, const MultiIndex& index);

/// f(u + du) expanded as sum over I of scaled_partial(f, I) * du^I. The result
/// lives over f's VarSet extended by the differentials.
Polynomial taylor_shift(const Polynomial& f, std::span<const ShiftVar> shift);

/// Polynomial truncated to total degree <= order in its differential
/// variables; the chart form of an order-l jet.
class JetPolynomial {
 public:
  JetPolynomial(Polynomial poly, std::vector<std::string> differentials, int order);

  const Polynomial& poly() const { return poly_; }
  const std::vector<std::string>& differentials() const { return differentials_; }
  int order() const { return order_; }
  /// Differentials set to zero, over the base VarSet.
  Polynomial order_zero() const;
  /// Coefficient polynomial (over the base VarSet) of du^I.
  Polynomial component(const MultiIndex& index) const;

 private:
  Polynomial poly_;
  std::vector<std::string> differentials_;
  int order_;
};

JetPolynomial taylor_truncate(const Polynomial& f, std::span<const ShiftVar> shift, int order);

using RationalPoint = Point;

/// Degree-<=order Taylor polynomial of f about the point, expanded back in
/// f's own variables: sum over #I <= order of (d^I f(a) / I!) (t - a)^I.
Polynomial taylor_fiber(const Polynomial& f, const RationalPoint& point, int order);

}  // namespace jetdisc
