#include "jetdisc/resultant.hpp"

#include "jetdisc/errors.hpp"
#include "jetdisc/poly_ops.hpp"

namespace jetdisc {

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::string_view var) {
  std::size_t k = f.vars().index(var);
  int deg = f.is_zero() ? 0 : f.degree_in(k);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg + 1));
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    int e = m[k];
    m.set(k, 0);
    buckets[static_cast<std::size_t>(e)].push_back({std::move(m), t.coef});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.emplace_back(f.vars(), std::move(b));
  return out;
}

PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (!(f.vars() == g.vars())) throw VarSetMismatch("resultant of polynomials over different VarSets");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  auto a = coefficients_in(f, var);
  auto b = coefficients_in(g, var);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0 || n == 0) throw DomainError("resultant needs positive degree in the eliminated variable");
  PolyMatrix s(f.vars(), m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s.set(r, r + j, a[m - j]);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s.set(n + r, r + j, b[n - j]);
  return s;
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  return matrix_determinant(sylvester_matrix(f, g, var));
}

namespace {

VarSet coefficient_vars(int d) {
  std::vector<std::string> names;
  for (int j = 0; j <= d; ++j) names.push_back("u" + std::to_string(j));
  return VarSet(std::move(names));
}

}  // namespace

Polynomial generic_univariate(int d) {
  if (d < 0) throw DomainError("degree must be non-negative");
  std::vector<std::string> names = coefficient_vars(d).names();
  names.push_back("t");
  VarSet vars(names);
  Polynomial f(vars);
  Polynomial t = Polynomial::variable(vars, "t");
  for (int j = 0; j <= d; ++j) f += Polynomial::variable(vars, "u" + std::to_string(j)) * t.pow(static_cast<unsigned>(j));
  return f;
}

Polynomial classical_discriminant(int d) {
  if (d < 2) throw DomainError("classical discriminant needs d >= 2");
  Polynomial f = generic_univariate(d);
  Polynomial res = sylvester_resultant(f, partial_derivative(f, "t"), "t");
  auto q = divide_exact(res, Polynomial::variable(f.vars(), "u" + std::to_string(d)));
  if (!q) throw Error("resultant is not divisible by the leading coefficient");
  VarSet target = coefficient_vars(d);
  Polynomial disc = primitive_part(embed(*q, target));
  std::vector<int> e(static_cast<std::size_t>(d + 1), 0);
  for (int j = 1; j < d; ++j) e[static_cast<std::size_t>(j)] = 2;
  if (disc.coefficient(Monomial(e)) < 0) disc = -disc;
  return disc;
}

}  // namespace jetdisc
