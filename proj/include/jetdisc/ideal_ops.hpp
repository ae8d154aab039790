#pragma once

#include <span>
#include <string>

#include "jetdisc/groebner.hpp"

namespace jetdisc {

/// Normal form modulo a Groebner basis of I (the cached one when present,
/// otherwise a grevlex basis) is zero.
bool ideal_membership(const Polynomial& g, const Ideal& ideal, const GroebnerOptions& options = {});

/// I intersected with K[remaining variables], over the VarSet with the removed
/// variables dropped. The result caches its basis (grevlex on what remains).
Ideal eliminate(const Ideal& ideal, std::span<const std::string> vars_to_remove, const GroebnerOptions& options = {});

/// I : g^infinity, by adjoining w with w*g - 1 and eliminating w.
Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerOptions& options = {});

/// I intersect J via w*I + (1 - w)*J, eliminating w.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// Krull dimension of K[vars]/I: the largest set of variables containing the
/// support of no grevlex leading monomial. -1 for the unit ideal.
int ideal_dimension(const Ideal& ideal, const GroebnerOptions& options = {});

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& options = {});

/// Equality via reduced grevlex bases.
bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// Name not present in vars, starting from `stem`.
std::string fresh_variable(const VarSet& vars, const std::string& stem);

}  // namespace jetdisc
