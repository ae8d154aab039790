#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jetdisc {

/// Exponent vector over a VarSet, one entry per variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t var) const { return exps_[var]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t var, int exp);

  Monomial operator*(const Monomial& other) const;
  /// Precondition: divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// a | b
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison; returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace jetdisc
