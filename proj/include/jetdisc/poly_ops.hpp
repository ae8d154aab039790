#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetdisc/polynomial.hpp"

namespace jetdisc {

using Bindings = std::map<std::string, Polynomial, std::less<>>;
using Point = std::map<std::string, Scalar, std::less<>>;

Polynomial partial_derivative(const Polynomial& f, std::string_view var);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Replaces each bound variable by its polynomial. All replacements must share
/// one VarSet, which becomes the result's VarSet; unbound variables that occur
/// in f are carried over by name and must exist there. With no bindings f is
/// returned unchanged.
Polynomial substitute(const Polynomial& f, const Bindings& bindings);
/// As above with an explicit target VarSet (needed when every replacement is
/// a constant, or to pin the result's VarSet).
Polynomial substitute(const Polynomial& f, const Bindings& bindings, const VarSet& target);

/// Re-expresses f over `target`, matching variables by name. Every variable
/// occurring in f must exist in target.
Polynomial embed(const Polynomial& f, const VarSet& target);

/// Requires a binding for every variable occurring in f.
Scalar evaluate(const Polynomial& f, const Point& point);
/// Values indexed by f's VarSet.
Scalar evaluate(const Polynomial& f, std::span<const Scalar> values);

/// Multiplies each term by a power of `h` so that the total degree in
/// `graded_vars` (all of f's variables when empty) plus the power of h equals
/// target_degree. `h` is appended to the VarSet when absent.
Polynomial homogenize(const Polynomial& f, std::string_view h, int target_degree,
                      std::span<const std::string> graded_vars = {});

/// Sets `var` to 1 and drops it from the VarSet. F must be homogeneous in
/// `graded_vars` (all variables when empty).
Polynomial dehomogenize(const Polynomial& F, std::string_view var,
                        std::span<const std::string> graded_vars = {});

bool is_homogeneous(const Polynomial& f, std::span<const std::string> graded_vars = {});

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single divisor under grevlex. The remainder is
/// zero exactly when b divides a.
DivisionResult divide(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Multiplies by the positive rational making all coefficients coprime
/// integers; sign is left unchanged.
Polynomial primitive_part(const Polynomial& f);

}  // namespace jetdisc
