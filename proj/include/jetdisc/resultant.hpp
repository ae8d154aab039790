#pragma once

#include <string_view>
#include <vector>

#include "jetdisc/matrix.hpp"
#include "jetdisc/polynomial.hpp"

namespace jetdisc {

/// Coefficients of f as a polynomial in `var` (index = power), each over f's
/// VarSet and free of `var`.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::string_view var);

/// (deg f + deg g)-square Sylvester matrix: deg g shifted rows of f's
/// coefficients (highest power first) followed by deg f rows of g's.
PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, std::string_view var);

/// det of the Sylvester matrix; same VarSet as the inputs, free of `var`.
/// Throws DomainError unless both have positive degree in `var`.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var);

/// u0 + u1*t + ... + ud*t^d over {u0, ..., ud, t}.
Polynomial generic_univariate(int d);

/// Discriminant of u0 + u1*t + ... + ud*t^d over {u0, ..., ud}:
/// Res(f, f', t) / ud, made primitive with the coefficient of
/// u1^2*u2^2*...*u_{d-1}^2 positive. Requires d >= 2.
Polynomial classical_discriminant(int d);

inline constexpr const char* kDiscriminantSignConvention = "u1sq-positive";

}  // namespace jetdisc
