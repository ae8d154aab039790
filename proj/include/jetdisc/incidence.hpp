#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "jetdisc/polynomial.hpp"
#include "jetdisc/taylor.hpp"

namespace jetdisc {

/// The triple (n, d, l): P^n, O(d) and jet order l.
struct LinearSystemConfig {
  int n = 1;
  int d = 1;
  int l = 0;

  /// Throws DomainError unless n >= 1, d >= 1 and 0 <= l <= d.
  void validate() const;
  /// dim W = C(n+d, n).
  std::size_t section_dimension() const;
  /// C(n+l, n): number of multi-indices of order <= l over n slots.
  std::size_t jet_rank() const;

  friend bool operator==(const LinearSystemConfig&, const LinearSystemConfig&) = default;
};

/// Exponent vectors p with #p = d over n+1 variables, descending
/// lexicographically (x0^d first). Position in this list is the y-index.
std::vector<std::vector<int>> degree_monomials(int n, int d);

/// Basic open set D(y^p) x D(x_i) of P(W*) x P^n.
struct Chart {
  std::vector<int> p;
  int i = 0;

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Chart from (index into degree_monomials, x-index).
Chart make_chart(const LinearSystemConfig& config, int y_index, int x_index);
void validate_chart(const LinearSystemConfig& config, const Chart& chart);
int y_index_of(const LinearSystemConfig& config, const Chart& chart);

/// Name of the coordinate u^q: `u<q1>` on P^1, `u_<q0>_..._<qn>` otherwise.
std::string coefficient_variable(int n, const std::vector<int>& q);
/// Affine coordinates t_k = x_k / x_i, k != i: `t` or `s` on P^1
/// (x-charts 0 and 1), `t<k>` otherwise.
std::vector<std::string> affine_variables(int n, int i);

/// u^f = sum over #q = d of u^q t^q restricted to a chart (u^p = 1, t_i = 1).
struct GenericSection {
  LinearSystemConfig config;
  Chart chart;
  Polynomial poly;
  std::vector<std::string> coefficient_vars;
  std::vector<std::string> affine_vars;
};

GenericSection generic_section(const LinearSystemConfig& config, const Chart& chart);

/// Local generators of the incidence ideal I_l(O(d)) on one chart: all
/// scaled partials of order <= l of the generic section, in graded-lex
/// order of the multi-index.
struct IncidenceIdeal {
  LinearSystemConfig config;
  Chart chart;
  std::vector<Polynomial> generators;
  std::vector<std::string> coefficient_vars;
  std::vector<std::string> affine_vars;

  const VarSet& vars() const { return generators.front().vars(); }
};

IncidenceIdeal incidence_generators(const LinearSystemConfig& config, const Chart& chart);

/// P^1 chart s = x0/x1 on the y-chart u_{y_index} = 1.
IncidenceIdeal p1_second_chart_generators(const LinearSystemConfig& config, int y_index);

nlohmann::json to_json(const IncidenceIdeal& ideal);

/// Point of P^1 in homogeneous coordinates (alpha : beta); the linear form
/// vanishing there is beta*x0 - alpha*x1.
struct ProjectivePoint {
  Scalar alpha;
  Scalar beta;
};

/// VarSet {x0, x1} used for binary forms.
const VarSet& binary_form_vars();
/// Coefficients c_j of x0^(d-j) x1^j. F must be homogeneous over {x0, x1}.
std::vector<Scalar> binary_form_coefficients(const Polynomial& F);
Polynomial binary_form(const std::vector<Scalar>& coefficients);
/// beta*x0 - alpha*x1
Polynomial linear_form_vanishing_at(const ProjectivePoint& point);

/// Largest m with (beta*x0 - alpha*x1)^m dividing F. F must be a nonzero
/// homogeneous form in x0, x1 and the point must not be (0, 0).
int root_multiplicity(const Polynomial& F, const ProjectivePoint& point);

/// Whether (F, point) lies in I_l(O(d)), decided by evaluating the chart
/// generators. The y-chart is the first nonzero coefficient of F, the x-chart
/// is 0 unless the point lies at infinity of that chart.
bool incidence_membership(const Polynomial& F, const ProjectivePoint& point, const LinearSystemConfig& config);
/// Same test on a fixed x-chart; throws DomainError if the point is not on it.
bool incidence_membership_on_chart(const Polynomial& F, const ProjectivePoint& point,
                                   const LinearSystemConfig& config, int x_index);

/// Values of the chart coordinates u^q (q != p) for the form F on y-chart
/// u_{y_index} = 1. Throws DomainError when that coefficient of F vanishes.
Point coefficient_point(const Polynomial& F, const LinearSystemConfig& config, int y_index);
/// First j with c_j != 0 (F nonzero).
int preferred_y_index(const Polynomial& F);

/// Values of the chart coefficients u^q making every generator vanish at the
/// affine point `where` (bindings for the chart's affine variables). Free
/// coefficients are taken from `free_values`. nullopt when no such section
/// exists on this chart.
std::optional<Point> section_vanishing_at(const IncidenceIdeal& ideal, const Point& where,
                                          const std::vector<Scalar>& free_values = {});

}  // namespace jetdisc
