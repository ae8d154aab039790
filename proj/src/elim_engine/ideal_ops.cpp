#include "jetdisc/ideal_ops.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"
#include "jetdisc/poly_ops.hpp"

namespace jetdisc {

namespace {

const std::vector<Polynomial>& basis_of(const Ideal& ideal, Ideal& storage, const GroebnerOptions& options) {
  if (ideal.has_basis()) return ideal.basis();
  storage = groebner_basis(ideal, TermOrder::grevlex(), options);
  return storage.basis();
}

Ideal grevlex_basis(const Ideal& ideal, const GroebnerOptions& options) {
  if (ideal.has_basis() && ideal.basis_order().kind() == TermOrder::Kind::Grevlex) return ideal;
  return groebner_basis(ideal, TermOrder::grevlex(), options);
}

bool unit_basis(const std::vector<Polynomial>& basis) {
  return std::any_of(basis.begin(), basis.end(), [](const Polynomial& p) { return p.is_constant() && !p.is_zero(); });
}

}  // namespace

std::string fresh_variable(const VarSet& vars, const std::string& stem) {
  if (!vars.contains(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string name = stem + "_" + std::to_string(k);
    if (!vars.contains(name)) return name;
  }
}

bool ideal_membership(const Polynomial& g, const Ideal& ideal, const GroebnerOptions& options) {
  if (!(g.vars() == ideal.vars())) throw VarSetMismatch("membership test over different VarSets");
  if (g.is_zero()) return true;
  Ideal storage(ideal.vars());
  const auto& basis = basis_of(ideal, storage, options);
  const TermOrder& order = ideal.has_basis() ? ideal.basis_order() : storage.basis_order();
  return normal_form(g, basis, order).is_zero();
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> vars_to_remove, const GroebnerOptions& options) {
  for (const auto& v : vars_to_remove)
    if (!ideal.vars().contains(v)) throw UnknownVariable(v);
  VarSet retained = ideal.vars().without(vars_to_remove);
  TermOrder order = TermOrder::block(ideal.vars(), vars_to_remove);
  Ideal gb = groebner_basis(ideal, order, options);
  std::vector<Polynomial> kept;
  for (const auto& p : gb.basis()) {
    bool free = std::none_of(p.terms().begin(), p.terms().end(),
                             [&](const Term& t) { return order.involves_eliminated(t.monomial); });
    if (free) kept.push_back(embed(p, retained));
  }
  // Ascending block-order leading terms restrict to ascending grevlex ones.
  Ideal result(retained, kept);
  return result.with_basis(std::move(kept), TermOrder::grevlex());
}

Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerOptions& options) {
  if (g.is_zero()) throw DomainError("saturation by the zero polynomial");
  if (!(g.vars() == ideal.vars())) throw VarSetMismatch("saturation over different VarSets");
  std::string w = fresh_variable(ideal.vars(), "w");
  VarSet ext = ideal.vars().extended(std::span<const std::string>(&w, 1));
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(embed(f, ext));
  gens.push_back(Polynomial::variable(ext, w) * embed(g, ext) - Polynomial::constant(ext, 1));
  return eliminate(Ideal(ext, std::move(gens)), std::span<const std::string>(&w, 1), options);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (!(a.vars() == b.vars())) throw VarSetMismatch("intersection over different VarSets");
  std::string w = fresh_variable(a.vars(), "w");
  VarSet ext = a.vars().extended(std::span<const std::string>(&w, 1));
  Polynomial wp = Polynomial::variable(ext, w);
  Polynomial one_minus_w = Polynomial::constant(ext, 1) - wp;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(wp * embed(f, ext));
  for (const auto& f : b.generators()) gens.push_back(one_minus_w * embed(f, ext));
  return eliminate(Ideal(ext, std::move(gens)), std::span<const std::string>(&w, 1), options);
}

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& options) {
  Ideal storage(ideal.vars());
  return unit_basis(basis_of(ideal, storage, options));
}

int ideal_dimension(const Ideal& ideal, const GroebnerOptions& options) {
  Ideal gb = grevlex_basis(ideal, options);
  if (unit_basis(gb.basis())) return -1;
  const std::size_t nv = ideal.vars().size();
  if (nv > 24) throw DomainError("ideal_dimension supports at most 24 variables");
  std::vector<std::uint32_t> lead_masks;
  for (const auto& p : gb.basis()) {
    std::uint32_t mask = 0;
    const Monomial& m = p.leading_term().monomial;
    for (std::size_t k = 0; k < nv; ++k)
      if (m[k] > 0) mask |= 1u << k;
    lead_masks.push_back(mask);
  }
  int best = 0;
  const std::uint32_t limit = nv == 0 ? 1u : (1u << nv);
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(lead_masks.begin(), lead_masks.end(),
                                    [&](std::uint32_t lm) { return (lm & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (!(a.vars() == b.vars())) return false;
  return grevlex_basis(a, options).basis() == grevlex_basis(b, options).basis();
}

}  // namespace jetdisc
