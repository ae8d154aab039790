#include "jetdisc/incidence.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"
#include "jetdisc/matrix.hpp"
#include "jetdisc/poly_io.hpp"

namespace jetdisc {

void LinearSystemConfig::validate() const {
  if (n < 1) throw DomainError("projective dimension n must be >= 1");
  if (d < 1) throw DomainError("line bundle degree d must be >= 1");
  if (l < 0 || l > d) throw DomainError("jet order l must satisfy 0 <= l <= d");
}

std::size_t LinearSystemConfig::section_dimension() const {
  return binomial(static_cast<unsigned>(n + d), static_cast<unsigned>(n)).get_ui();
}

std::size_t LinearSystemConfig::jet_rank() const {
  return binomial(static_cast<unsigned>(n + l), static_cast<unsigned>(n)).get_ui();
}

std::vector<std::vector<int>> degree_monomials(int n, int d) {
  if (n < 0 || d < 0) throw DomainError("degree_monomials needs n, d >= 0");
  std::vector<std::vector<int>> out;
  for (const auto& m : multiindices_of_order(static_cast<std::size_t>(n + 1), d)) out.push_back(m.entries());
  return out;
}

void validate_chart(const LinearSystemConfig& config, const Chart& chart) {
  if (chart.p.size() != static_cast<std::size_t>(config.n + 1))
    throw DomainError("chart exponent vector must have n+1 entries");
  int sum = 0;
  for (int e : chart.p) {
    if (e < 0) throw DomainError("chart exponent vector has a negative entry");
    sum += e;
  }
  if (sum != config.d) throw DomainError("chart exponent vector must have total degree d");
  if (chart.i < 0 || chart.i > config.n) throw DomainError("x-chart index out of range");
}

Chart make_chart(const LinearSystemConfig& config, int y_index, int x_index) {
  auto basis = degree_monomials(config.n, config.d);
  if (y_index < 0 || static_cast<std::size_t>(y_index) >= basis.size())
    throw DomainError("y-chart index out of range");
  Chart chart{basis[static_cast<std::size_t>(y_index)], x_index};
  validate_chart(config, chart);
  return chart;
}

int y_index_of(const LinearSystemConfig& config, const Chart& chart) {
  auto basis = degree_monomials(config.n, config.d);
  auto it = std::find(basis.begin(), basis.end(), chart.p);
  if (it == basis.end()) throw DomainError("chart exponent vector is not a degree-d monomial");
  return static_cast<int>(it - basis.begin());
}

std::string coefficient_variable(int n, const std::vector<int>& q) {
  if (n == 1) return "u" + std::to_string(q.at(1));
  std::string name = "u";
  for (int e : q) name += "_" + std::to_string(e);
  return name;
}

std::vector<std::string> affine_variables(int n, int i) {
  if (n == 1) return {i == 0 ? "t" : "s"};
  std::vector<std::string> out;
  for (int k = 0; k <= n; ++k)
    if (k != i) out.push_back("t" + std::to_string(k));
  return out;
}

GenericSection generic_section(const LinearSystemConfig& config, const Chart& chart) {
  if (config.n < 1 || config.d < 1) throw DomainError("generic section needs n >= 1 and d >= 1");
  validate_chart(config, chart);
  auto basis = degree_monomials(config.n, config.d);
  std::vector<std::string> coeffs;
  for (const auto& q : basis)
    if (q != chart.p) coeffs.push_back(coefficient_variable(config.n, q));
  auto affine = affine_variables(config.n, chart.i);
  std::vector<std::string> names = coeffs;
  names.insert(names.end(), affine.begin(), affine.end());
  VarSet vars(names);

  std::vector<Term> terms;
  for (const auto& q : basis) {
    Monomial m(vars.size());
    if (q != chart.p) m.set(vars.index(coefficient_variable(config.n, q)), 1);
    std::size_t slot = coeffs.size();
    for (int k = 0; k <= config.n; ++k) {
      if (k == chart.i) continue;
      m.set(slot++, q[static_cast<std::size_t>(k)]);
    }
    terms.push_back({std::move(m), 1});
  }
  return {config, chart, Polynomial(vars, std::move(terms)), std::move(coeffs), std::move(affine)};
}

IncidenceIdeal incidence_generators(const LinearSystemConfig& config, const Chart& chart) {
  config.validate();
  GenericSection section = generic_section(config, chart);
  IncidenceIdeal ideal{config, chart, {}, section.coefficient_vars, section.affine_vars};
  for (const auto& index : enumerate_multiindices(section.affine_vars.size(), config.l))
    ideal.generators.push_back(scaled_partial(section.poly, section.affine_vars, index));
  return ideal;
}

IncidenceIdeal p1_second_chart_generators(const LinearSystemConfig& config, int y_index) {
  if (config.n != 1) throw DomainError("the s = x0/x1 chart is only defined on P^1");
  return incidence_generators(config, make_chart(config, y_index, 1));
}

nlohmann::json to_json(const IncidenceIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_json(g));
  return {{"config", {{"n", ideal.config.n}, {"d", ideal.config.d}, {"l", ideal.config.l}}},
          {"chart", {{"p", ideal.chart.p}, {"i", ideal.chart.i}}},
          {"generators", std::move(gens)}};
}

std::optional<Point> section_vanishing_at(const IncidenceIdeal& ideal, const Point& where,
                                          const std::vector<Scalar>& free_values) {
  VarSet coeff_vars(ideal.coefficient_vars);
  Bindings bindings;
  for (const auto& a : ideal.affine_vars) {
    auto it = where.find(a);
    if (it == where.end()) throw DomainError("missing binding for affine variable '" + a + "'");
    bindings.emplace(a, Polynomial::constant(coeff_vars, it->second));
  }
  const std::size_t rows = ideal.generators.size();
  const std::size_t cols = coeff_vars.size();
  RationalMatrix a(rows, cols);
  std::vector<Scalar> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Polynomial g = substitute(ideal.generators[r], bindings, coeff_vars);
    for (const auto& t : g.terms()) {
      if (t.monomial.degree() > 1) throw Error("incidence generator is not affine-linear in the coefficients");
      if (t.monomial.is_one()) {
        rhs[r] = -t.coef;
      } else {
        for (std::size_t k = 0; k < cols; ++k)
          if (t.monomial[k] == 1) a(r, k) = t.coef;
      }
    }
  }
  auto x = solve_linear(a, rhs, free_values);
  if (!x) return std::nullopt;
  Point point;
  for (std::size_t k = 0; k < cols; ++k) point.emplace(coeff_vars.name(k), (*x)[k]);
  return point;
}

}  // namespace jetdisc
