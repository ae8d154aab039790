#include "jetdisc/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "jetdisc/errors.hpp"

namespace jetdisc {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

// Merges two grevlex-descending term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign > 0 ? Scalar(b[j].coef) : Scalar(-b[j].coef)});
      ++j;
    } else {
      Scalar s = sign > 0 ? Scalar(a[i].coef + b[j].coef) : Scalar(a[i].coef - b[j].coef);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, sign > 0 ? Scalar(b[j].coef) : Scalar(-b[j].coef)});
  return out;
}

}  // namespace

Polynomial::Polynomial(VarSet vars, std::vector<Term> terms) : vars_(std::move(vars)) {
  for (const auto& t : terms)
    if (t.monomial.size() != vars_.size())
      throw VarSetMismatch("monomial arity does not match VarSet size");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coef += t.coef;
    } else {
      if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(const VarSet& vars, const Scalar& value) {
  Polynomial p(vars);
  if (value != 0) p.terms_.push_back({Monomial(vars.size()), value});
  return p;
}

Polynomial Polynomial::variable(const VarSet& vars, std::string_view name) {
  Monomial m(vars.size());
  m.set(vars.index(name), 1);
  return monomial(vars, m);
}

Polynomial Polynomial::monomial(const VarSet& vars, const Monomial& m, const Scalar& coef) {
  if (m.size() != vars.size()) throw VarSetMismatch("monomial arity does not match VarSet size");
  Polynomial p(vars);
  if (coef != 0) p.terms_.push_back({m, coef});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

int Polynomial::degree() const {
  // Grevlex is degree-compatible, so the leading term has maximal degree.
  return terms_.empty() ? kZeroDegree : terms_.front().monomial.degree();
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

int Polynomial::degree_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : vars) s += t.monomial[v];
    d = std::max(d, s);
  }
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_compare(t.monomial, x) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coef;
  return 0;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coef;
  return 0;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (t.monomial[k] > 0) used[k] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < used.size(); ++k)
    if (used[k]) out.push_back(k);
  return out;
}

void Polynomial::require_same_vars(const Polynomial& other, const char* op) const {
  if (!(vars_ == other.vars_)) throw VarSetMismatch(std::string("variable-set mismatch in ") + op);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(other, "addition");
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(other, "subtraction");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b, "multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coef * y.coef;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial r(a.vars_);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coef != b.terms_[k].coef) return false;
  return true;
}

}  // namespace jetdisc
