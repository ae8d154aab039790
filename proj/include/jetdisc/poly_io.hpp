#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "jetdisc/polynomial.hpp"

namespace jetdisc {

/// Parses `coef*var^exp*... +/- ...`. Variables are collected in order of
/// first appearance.
Polynomial parse_polynomial(std::string_view text);
/// Parses over a fixed VarSet; unknown variables raise ParseError.
Polynomial parse_polynomial(std::string_view text, const VarSet& vars);

/// Canonical text, e.g. `3*t^2 - 4*t + 1`; the zero polynomial prints as `0`.
std::string to_string(const Polynomial& f);

/// `{"vars":[...],"terms":[{"coef":"p/q","exps":[...]}]}`, terms in canonical order.
nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace jetdisc
