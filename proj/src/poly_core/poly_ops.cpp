#include "jetdisc/poly_ops.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"

namespace jetdisc {

namespace {

std::vector<std::size_t> graded_indices(const VarSet& vars, std::span<const std::string> graded_vars) {
  std::vector<std::size_t> idx;
  if (graded_vars.empty()) {
    for (std::size_t k = 0; k < vars.size(); ++k) idx.push_back(k);
  } else {
    for (const auto& v : graded_vars) idx.push_back(vars.index(v));
  }
  return idx;
}

int graded_degree(const Monomial& m, std::span<const std::size_t> idx) {
  int s = 0;
  for (auto k : idx) s += m[k];
  return s;
}

}  // namespace

Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  auto k = f.vars().find(var);
  if (!k) throw UnknownVariable(std::string(var));
  return partial_derivative(f, *k);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.vars().size()) throw DomainError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({std::move(m), t.coef * e});
  }
  return Polynomial(f.vars(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const Bindings& bindings) {
  if (bindings.empty()) return f;
  const VarSet& target = bindings.begin()->second.vars();
  return substitute(f, bindings, target);
}

Polynomial substitute(const Polynomial& f, const Bindings& bindings, const VarSet& target) {
  const VarSet& src = f.vars();
  // Replacement for every source variable: a bound polynomial or the same-named
  // target variable (resolved lazily, only if it occurs).
  std::vector<const Polynomial*> bound(src.size(), nullptr);
  for (const auto& [name, poly] : bindings) {
    auto k = src.find(name);
    if (!k) throw UnknownVariable(name);
    if (!(poly.vars() == target)) throw VarSetMismatch("replacement polynomials must share the target VarSet");
    bound[*k] = &poly;
  }
  std::vector<std::optional<std::size_t>> passthrough(src.size());
  for (auto k : f.support()) {
    if (bound[k]) continue;
    auto tk = target.find(src.name(k));
    if (!tk) throw VarSetMismatch("unbound variable '" + src.name(k) + "' missing from target VarSet");
    passthrough[k] = tk;
  }

  // Powers of bound replacements, computed on demand.
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t k, int e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *bound[k]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Monomial mono(target.size());
    bool any_bound = false;
    for (std::size_t k = 0; k < src.size(); ++k) {
      int e = t.monomial[k];
      if (e == 0) continue;
      if (bound[k]) {
        any_bound = true;
      } else {
        mono.set(*passthrough[k], mono[*passthrough[k]] + e);
      }
    }
    Polynomial term = Polynomial::monomial(target, mono, t.coef);
    if (any_bound) {
      for (std::size_t k = 0; k < src.size(); ++k)
        if (bound[k] && t.monomial[k] > 0) term *= power(k, t.monomial[k]);
    }
    result += term;
  }
  return result;
}

Polynomial embed(const Polynomial& f, const VarSet& target) {
  if (f.vars() == target) return f;
  std::vector<std::size_t> map(f.vars().size(), 0);
  for (auto k : f.support()) {
    auto tk = target.find(f.vars().name(k));
    if (!tk) throw VarSetMismatch("variable '" + f.vars().name(k) + "' missing from target VarSet");
    map[k] = *tk;
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.size());
    for (std::size_t k = 0; k < f.vars().size(); ++k)
      if (t.monomial[k] > 0) m.set(map[k], t.monomial[k]);
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial(target, std::move(terms));
}

Scalar evaluate(const Polynomial& f, const Point& point) {
  std::vector<Scalar> values(f.vars().size());
  for (auto k : f.support()) {
    auto it = point.find(f.vars().name(k));
    if (it == point.end()) throw DomainError("missing binding for variable '" + f.vars().name(k) + "'");
    values[k] = it->second;
  }
  return evaluate(f, values);
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> values) {
  if (values.size() != f.vars().size()) throw DomainError("point arity does not match VarSet size");
  Scalar total = 0;
  Scalar p;
  for (const auto& t : f.terms()) {
    Scalar term = t.coef;
    for (std::size_t k = 0; k < values.size(); ++k) {
      int e = t.monomial[k];
      if (e == 0) continue;
      mpz_pow_ui(p.get_num_mpz_t(), values[k].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), values[k].get_den_mpz_t(), e);
      term *= p;
    }
    total += term;
  }
  return total;
}

bool is_homogeneous(const Polynomial& f, std::span<const std::string> graded_vars) {
  auto idx = graded_indices(f.vars(), graded_vars);
  if (f.is_zero()) return true;
  int d = graded_degree(f.terms().front().monomial, idx);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return graded_degree(t.monomial, idx) == d; });
}

Polynomial homogenize(const Polynomial& f, std::string_view h, int target_degree,
                      std::span<const std::string> graded_vars) {
  auto idx = graded_indices(f.vars(), graded_vars);
  auto hpos = f.vars().find(h);
  if (hpos && std::find(idx.begin(), idx.end(), *hpos) != idx.end())
    throw DomainError("homogenizing variable must not be one of the graded variables");
  VarSet target = f.vars();
  if (!hpos) {
    std::string name(h);
    target = f.vars().extended(std::span<const std::string>(&name, 1));
    hpos = target.size() - 1;
  }
  if (!f.is_zero() && f.degree_in(idx) > target_degree)
    throw DomainError("target degree below the polynomial's degree");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.monomial.exponents();
    e.resize(target.size(), 0);
    e[*hpos] += target_degree - graded_degree(t.monomial, idx);
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& F, std::string_view var, std::span<const std::string> graded_vars) {
  if (!is_homogeneous(F, graded_vars)) throw DomainError("dehomogenize requires a homogeneous polynomial");
  std::size_t pos = F.vars().index(var);
  std::string name(var);
  VarSet target = F.vars().without(std::span<const std::string>(&name, 1));
  std::vector<Term> terms;
  for (const auto& t : F.terms()) {
    std::vector<int> e;
    for (std::size_t k = 0; k < F.vars().size(); ++k)
      if (k != pos) e.push_back(t.monomial[k]);
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial(target, std::move(terms));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars())) throw VarSetMismatch("variable-set mismatch in division");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = b.leading_term();
  Polynomial quotient(a.vars());
  Polynomial remainder(a.vars());
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (divides(lead.monomial, t.monomial)) {
      Polynomial q = Polynomial::monomial(a.vars(), t.monomial / lead.monomial, t.coef / lead.coef);
      quotient += q;
      rest -= q * b;
    } else {
      Polynomial lt = Polynomial::monomial(a.vars(), t.monomial, t.coef);
      remainder += lt;
      rest -= lt;
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  auto r = divide(a, b);
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotient);
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer g = 0, l = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Scalar scale(l, g);
  scale.canonicalize();
  return f * scale;
}

}  // namespace jetdisc
