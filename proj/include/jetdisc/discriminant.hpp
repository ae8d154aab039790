#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "jetdisc/groebner.hpp"
#include "jetdisc/incidence.hpp"

namespace jetdisc {

/// The elimination ideal of I_l(O(d)) on one y-chart, combined over all
/// x-charts.
struct DiscriminantResult {
  LinearSystemConfig config;
  int y_index = 0;
  /// Over the chart's coefficient variables; carries its reduced grevlex basis.
  Ideal ideal;
  /// Affine variables eliminated, over all x-charts.
  std::vector<std::string> eliminated;
  bool principal = false;
  bool unit = false;
};

/// For each x-chart i: eliminate the affine variables from the chart
/// incidence ideal on y-chart `y_index`; the results are intersected.
DiscriminantResult discriminant_ideal(const LinearSystemConfig& config, int y_index = 0,
                                      const GroebnerOptions& options = {});

/// All generators vanish at the given coefficient values.
bool discriminant_contains(const DiscriminantResult& result, const Point& coefficients);

/// classical_discriminant(d) with u_{y_index} = 1, over the n = 1 chart's
/// coefficient variables.
Polynomial chart_classical_discriminant(int d, int y_index);

/// a = c * b for a nonzero rational c (both zero also counts).
bool equal_up_to_unit(const Polynomial& a, const Polynomial& b);

/// Ideal JSON plus metadata.
nlohmann::json to_json(const DiscriminantResult& result);

}  // namespace jetdisc
