#include "jetdisc/taylor.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"

namespace jetdisc {

std::vector<ShiftVar> default_differentials(std::span<const std::string> vars) {
  std::vector<ShiftVar> out;
  for (const auto& v : vars) out.push_back({v, "d" + v});
  return out;
}

Polynomial scaled_partial(const Polynomial& f, std::span<const std::string> vars, const MultiIndex& index) {
  if (index.size() != vars.size()) throw DomainError("multi-index length does not match variable list");
  Polynomial g = f;
  for (std::size_t j = 0; j < vars.size() && !g.is_zero(); ++j) {
    std::size_t k = f.vars().index(vars[j]);
    for (int r = 0; r < index[j] && !g.is_zero(); ++r) g = partial_derivative(g, k);
  }
  if (index.order() > 0) g *= Scalar(1, 1) / Scalar(index.factorial());
  return g;
}

namespace {

struct ExtendedRing {
  VarSet vars;
  std::vector<std::string> base_names;
  std::vector<std::string> diff_names;
  std::vector<std::size_t> diff_pos;
};

ExtendedRing extend_ring(const VarSet& base, std::span<const ShiftVar> shift) {
  ExtendedRing ring;
  for (const auto& s : shift) {
    if (!base.contains(s.var)) throw UnknownVariable(s.var);
    if (base.contains(s.differential))
      throw DomainError("differential variable '" + s.differential + "' collides with an existing variable");
    ring.base_names.push_back(s.var);
    ring.diff_names.push_back(s.differential);
  }
  ring.vars = base.extended(ring.diff_names);
  for (const auto& d : ring.diff_names) ring.diff_pos.push_back(ring.vars.index(d));
  return ring;
}

Polynomial expand(const Polynomial& f, const ExtendedRing& ring, int max_order) {
  Polynomial result(ring.vars);
  if (f.is_zero() || ring.diff_names.empty()) return embed(f, ring.vars);
  for (const auto& index : enumerate_multiindices(ring.base_names.size(), max_order)) {
    Polynomial coeff = scaled_partial(f, ring.base_names, index);
    if (coeff.is_zero()) continue;
    Monomial du(ring.vars.size());
    for (std::size_t j = 0; j < index.size(); ++j) du.set(ring.diff_pos[j], index[j]);
    result += embed(coeff, ring.vars) * Polynomial::monomial(ring.vars, du);
  }
  return result;
}

std::vector<std::size_t> indices_of(const VarSet& vars, std::span<const ShiftVar> shift) {
  std::vector<std::size_t> idx;
  for (const auto& s : shift) idx.push_back(vars.index(s.var));
  return idx;
}

}  // namespace

Polynomial taylor_shift(const Polynomial& f, std::span<const ShiftVar> shift) {
  auto ring = extend_ring(f.vars(), shift);
  int deg = f.is_zero() ? 0 : f.degree_in(indices_of(f.vars(), shift));
  return expand(f, ring, deg);
}

JetPolynomial taylor_truncate(const Polynomial& f, std::span<const ShiftVar> shift, int order) {
  if (order < 0) throw DomainError("jet order must be non-negative");
  auto ring = extend_ring(f.vars(), shift);
  int deg = f.is_zero() ? 0 : f.degree_in(indices_of(f.vars(), shift));
  return JetPolynomial(expand(f, ring, std::min(order, deg)), ring.diff_names, order);
}

JetPolynomial::JetPolynomial(Polynomial poly, std::vector<std::string> differentials, int order)
    : poly_(std::move(poly)), differentials_(std::move(differentials)), order_(order) {
  if (order_ < 0) throw DomainError("jet order must be non-negative");
  std::vector<std::size_t> pos;
  for (const auto& d : differentials_) pos.push_back(poly_.vars().index(d));
  for (const auto& t : poly_.terms()) {
    int s = 0;
    for (auto k : pos) s += t.monomial[k];
    if (s > order_) throw DomainError("jet polynomial has a term above its order");
  }
}

Polynomial JetPolynomial::order_zero() const { return component(MultiIndex(std::vector<int>(differentials_.size(), 0))); }

Polynomial JetPolynomial::component(const MultiIndex& index) const {
  if (index.size() != differentials_.size()) throw DomainError("multi-index length does not match differentials");
  const VarSet& vars = poly_.vars();
  VarSet base = vars.without(differentials_);
  std::vector<std::size_t> pos;
  for (const auto& d : differentials_) pos.push_back(vars.index(d));
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (std::find(pos.begin(), pos.end(), k) == pos.end()) keep.push_back(k);
  std::vector<Term> terms;
  for (const auto& t : poly_.terms()) {
    bool match = true;
    for (std::size_t j = 0; j < pos.size(); ++j)
      if (t.monomial[pos[j]] != index[j]) match = false;
    if (!match) continue;
    std::vector<int> e;
    for (auto k : keep) e.push_back(t.monomial[k]);
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial(base, std::move(terms));
}

Polynomial taylor_fiber(const Polynomial& f, const RationalPoint& point, int order) {
  if (order < 0) throw DomainError("jet order must be non-negative");
  const VarSet& vars = f.vars();
  for (auto k : f.support())
    if (!point.count(vars.name(k))) throw DomainError("missing binding for variable '" + vars.name(k) + "'");
  std::vector<std::string> names;
  std::vector<Scalar> centre;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = point.find(vars.name(k));
    if (it == point.end()) continue;
    names.push_back(vars.name(k));
    centre.push_back(it->second);
  }
  if (names.empty()) return f;

  // (x_j - a_j)^e, cached per variable.
  std::vector<std::vector<Polynomial>> shifted(names.size());
  auto shifted_power = [&](std::size_t j, int e) -> const Polynomial& {
    auto& cache = shifted[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(vars, 1));
    Polynomial lin = Polynomial::variable(vars, names[j]) - Polynomial::constant(vars, centre[j]);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * lin);
    return cache[e];
  };

  Polynomial result(vars);
  for (const auto& index : enumerate_multiindices(names.size(), order)) {
    Polynomial d = scaled_partial(f, names, index);
    if (d.is_zero()) continue;
    Scalar c = evaluate(d, point);
    if (c == 0) continue;
    Polynomial term = Polynomial::constant(vars, c);
    for (std::size_t j = 0; j < index.size(); ++j)
      if (index[j] > 0) term *= shifted_power(j, index[j]);
    result += term;
  }
  return result;
}

}  // namespace jetdisc
