#include "jetdisc/discriminant.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"
#include "jetdisc/ideal_ops.hpp"
#include "jetdisc/poly_ops.hpp"
#include "jetdisc/resultant.hpp"

namespace jetdisc {

DiscriminantResult discriminant_ideal(const LinearSystemConfig& config, int y_index, const GroebnerOptions& options) {
  config.validate();
  if (config.l < 1) throw DomainError("discriminants start at jet order l = 1");
  DiscriminantResult result{config, y_index, Ideal(VarSet()), {}, false, false};
  std::optional<Ideal> combined;
  for (int i = 0; i <= config.n; ++i) {
    IncidenceIdeal inc = incidence_generators(config, make_chart(config, y_index, i));
    Ideal chart_ideal(inc.vars(), inc.generators);
    Ideal image = eliminate(chart_ideal, inc.affine_vars, options);
    for (const auto& a : inc.affine_vars) result.eliminated.push_back(a);
    if (!combined || is_unit_ideal(*combined)) {
      combined = std::move(image);
    } else if (!is_unit_ideal(image)) {
      combined = ideal_intersection(*combined, image, options);
    }
  }
  result.ideal = groebner_basis(*combined, TermOrder::grevlex(), options);
  result.unit = is_unit_ideal(result.ideal);
  result.principal = !result.unit && result.ideal.basis().size() == 1;
  return result;
}

bool discriminant_contains(const DiscriminantResult& result, const Point& coefficients) {
  const auto& gens = result.ideal.basis();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return evaluate(g, coefficients) == 0; });
}

Polynomial chart_classical_discriminant(int d, int y_index) {
  if (y_index < 0 || y_index > d) throw DomainError("y-chart index out of range");
  Polynomial disc = classical_discriminant(d);
  std::vector<std::string> names;
  for (int j = 0; j <= d; ++j)
    if (j != y_index) names.push_back("u" + std::to_string(j));
  VarSet chart_vars(names);
  Bindings bindings;
  for (int j = 0; j <= d; ++j) {
    std::string name = "u" + std::to_string(j);
    bindings.emplace(name, j == y_index ? Polynomial::constant(chart_vars, 1) : Polynomial::variable(chart_vars, name));
  }
  return substitute(disc, bindings, chart_vars);
}

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars()) || a.size() != b.size()) return false;
  if (a.is_zero()) return true;
  Scalar ratio = a.terms().front().coef / b.terms().front().coef;
  return a == b * ratio;
}

nlohmann::json to_json(const DiscriminantResult& result) {
  nlohmann::json out = to_json(result.ideal);
  out["metadata"] = {{"n", result.config.n},
                     {"d", result.config.d},
                     {"l", result.config.l},
                     {"chart", {{"y_index", result.y_index}, {"p", make_chart(result.config, result.y_index, 0).p}}},
                     {"eliminated", result.eliminated},
                     {"principal", result.principal},
                     {"unit", result.unit},
                     {"sign_convention", kDiscriminantSignConvention}};
  return out;
}

}  // namespace jetdisc
