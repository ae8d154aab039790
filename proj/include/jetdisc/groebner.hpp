#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "json.hpp"
#include "jetdisc/polynomial.hpp"
#include "jetdisc/term_order.hpp"

namespace jetdisc {

struct GroebnerOptions {
  /// Abort once this many critical pairs have been created.
  std::size_t max_pairs = 100000;
  /// Wall-clock limit in seconds; zero disables it.
  double timeout_seconds = 0;
};

/// Polynomial ideal given by generators, optionally carrying a reduced
/// Groebner basis together with the order it was computed for.
class Ideal {
 public:
  explicit Ideal(VarSet vars) : vars_(std::move(vars)) {}
  /// Zero generators are dropped; all must live over `vars`.
  Ideal(VarSet vars, std::vector<Polynomial> generators);

  const VarSet& vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool has_basis() const { return basis_ != nullptr; }
  /// Precondition: has_basis().
  const std::vector<Polynomial>& basis() const { return basis_->polys; }
  const TermOrder& basis_order() const { return basis_->order; }

  /// Copy of this ideal carrying `basis` as its cached reduced basis.
  Ideal with_basis(std::vector<Polynomial> basis, const TermOrder& order) const;

 private:
  struct CachedBasis {
    std::vector<Polynomial> polys;
    TermOrder order;
  };

  VarSet vars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const CachedBasis> basis_;
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& f, const TermOrder& order);

/// Buchberger's algorithm (sugar selection, Gebauer-Moeller pair criteria).
/// Returns `ideal` with its reduced, monic basis cached; basis elements are
/// sorted by increasing leading monomial. Throws ResourceLimitError when the
/// pair bound or deadline is exceeded.
Ideal groebner_basis(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& options = {});

/// Fully reduced remainder of f modulo `divisors` under `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

struct GroebnerCheck {
  bool s_pairs_reduce = false;
  bool generators_reduce = false;
  bool ok() const { return s_pairs_reduce && generators_reduce; }
};

/// Buchberger criterion on `basis` plus reduction of every generator.
GroebnerCheck verify_groebner(std::span<const Polynomial> generators, std::span<const Polynomial> basis,
                              const TermOrder& order);

/// Called after every groebner_basis() on the installing thread.
using GroebnerObserver = std::function<void(const Ideal& input, const Ideal& result)>;

class ScopedGroebnerObserver {
 public:
  explicit ScopedGroebnerObserver(GroebnerObserver observer);
  ~ScopedGroebnerObserver();
  ScopedGroebnerObserver(const ScopedGroebnerObserver&) = delete;
  ScopedGroebnerObserver& operator=(const ScopedGroebnerObserver&) = delete;

 private:
  GroebnerObserver observer_;
  const GroebnerObserver* previous_;
};

/// `{"vars":[...],"order":{...},"generators":[...]}`; generators are the
/// cached basis when present.
nlohmann::json to_json(const Ideal& ideal);

}  // namespace jetdisc
