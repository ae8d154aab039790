#pragma once

#include <string>
#include <vector>

#include "jetdisc/poly_io.hpp"
#include "jetdisc/polynomial.hpp"
#include "jetdisc/sampling.hpp"

namespace jetdisc::testing {

inline Polynomial P(const std::string& text, const VarSet& vars) { return parse_polynomial(text, vars); }

/// Random polynomial with up to `max_terms` terms of total degree <= max_degree
/// and integer coefficients in [-coef_bound, coef_bound].
inline Polynomial random_polynomial(SampleRng& rng, const VarSet& vars, int max_terms, int max_degree,
                                    int coef_bound = 5) {
  std::vector<Term> terms;
  int count = rng.uniform(0, max_terms);
  for (int k = 0; k < count; ++k) {
    std::vector<int> exps(vars.size(), 0);
    int budget = rng.uniform(0, max_degree);
    for (int b = 0; b < budget; ++b) exps[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vars.size()) - 1))]++;
    terms.push_back({Monomial(exps), Scalar(rng.uniform(-coef_bound, coef_bound))});
  }
  return Polynomial(vars, std::move(terms));
}

}  // namespace jetdisc::testing
