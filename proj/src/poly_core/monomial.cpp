#include "jetdisc/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace jetdisc {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

void Monomial::set(std::size_t var, int exp) {
  degree_ += exp - exps_[var];
  exps_[var] = exp;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(size() == other.size());
  Monomial r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += other.exps_[k];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(divides(other, *this));
  Monomial r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= other.exps_[k];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree() > b.degree()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::max(a[k], b[k]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

}  // namespace jetdisc
