#include <algorithm>

#include "jetdisc/errors.hpp"
#include "jetdisc/incidence.hpp"
#include "jetdisc/poly_ops.hpp"

namespace jetdisc {

const VarSet& binary_form_vars() {
  static const VarSet vars{"x0", "x1"};
  return vars;
}

namespace {

Polynomial as_binary_form(const Polynomial& F) {
  Polynomial G = embed(F, binary_form_vars());
  if (G.is_zero()) throw DomainError("the zero form has no well-defined roots");
  if (!is_homogeneous(G)) throw DomainError("binary form must be homogeneous in x0, x1");
  return G;
}

Scalar chart_coordinate(const ProjectivePoint& point, int x_index) {
  if (x_index == 0) {
    if (point.alpha == 0) throw DomainError("point lies at infinity of the t = x1/x0 chart");
    return point.beta / point.alpha;
  }
  if (x_index == 1) {
    if (point.beta == 0) throw DomainError("point lies at infinity of the s = x0/x1 chart");
    return point.alpha / point.beta;
  }
  throw DomainError("x-chart index must be 0 or 1 on P^1");
}

}  // namespace

std::vector<Scalar> binary_form_coefficients(const Polynomial& F) {
  Polynomial G = as_binary_form(F);
  int d = G.degree();
  std::vector<Scalar> c(static_cast<std::size_t>(d + 1));
  for (const auto& t : G.terms()) c[static_cast<std::size_t>(t.monomial[1])] = t.coef;
  return c;
}

Polynomial binary_form(const std::vector<Scalar>& coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  std::vector<Term> terms;
  for (int j = 0; j <= d; ++j) terms.push_back({Monomial({d - j, j}), coefficients[static_cast<std::size_t>(j)]});
  return Polynomial(binary_form_vars(), std::move(terms));
}

Polynomial linear_form_vanishing_at(const ProjectivePoint& point) {
  if (point.alpha == 0 && point.beta == 0) throw DomainError("(0, 0) is not a point of P^1");
  return binary_form({point.beta, -point.alpha});
}

int root_multiplicity(const Polynomial& F, const ProjectivePoint& point) {
  Polynomial rest = as_binary_form(F);
  Polynomial lin = linear_form_vanishing_at(point);
  int m = 0;
  while (rest.degree() > 0) {
    auto q = divide_exact(rest, lin);
    if (!q) break;
    rest = std::move(*q);
    ++m;
  }
  return m;
}

int preferred_y_index(const Polynomial& F) {
  auto c = binary_form_coefficients(F);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) return static_cast<int>(j);
  throw DomainError("the zero form has no chart");
}

Point coefficient_point(const Polynomial& F, const LinearSystemConfig& config, int y_index) {
  if (config.n != 1) throw DomainError("coefficient points of binary forms need n = 1");
  auto c = binary_form_coefficients(F);
  if (static_cast<int>(c.size()) - 1 != config.d) throw DomainError("form degree does not match d");
  if (y_index < 0 || y_index > config.d) throw DomainError("y-chart index out of range");
  const Scalar& unit = c[static_cast<std::size_t>(y_index)];
  if (unit == 0) throw DomainError("form is not on the requested y-chart");
  Point point;
  for (int j = 0; j <= config.d; ++j)
    if (j != y_index) point.emplace(coefficient_variable(1, {config.d - j, j}), c[static_cast<std::size_t>(j)] / unit);
  return point;
}

bool incidence_membership_on_chart(const Polynomial& F, const ProjectivePoint& point,
                                   const LinearSystemConfig& config, int x_index) {
  config.validate();
  if (config.n != 1) throw DomainError("incidence membership of binary forms needs n = 1");
  Scalar coord = chart_coordinate(point, x_index);
  int y = preferred_y_index(F);
  Point at = coefficient_point(F, config, y);
  IncidenceIdeal ideal = incidence_generators(config, make_chart(config, y, x_index));
  at.emplace(ideal.affine_vars.front(), coord);
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const Polynomial& g) { return evaluate(g, at) == 0; });
}

bool incidence_membership(const Polynomial& F, const ProjectivePoint& point, const LinearSystemConfig& config) {
  if (point.alpha == 0 && point.beta == 0) throw DomainError("(0, 0) is not a point of P^1");
  return incidence_membership_on_chart(F, point, config, point.alpha != 0 ? 0 : 1);
}

}  // namespace jetdisc
