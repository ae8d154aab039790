#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "jetdisc/monomial.hpp"
#include "jetdisc/var_set.hpp"

namespace jetdisc {

/// Monomial order: grevlex, lex, or a two-block elimination order (grevlex
/// on the eliminated group, ties broken by grevlex on the rest).
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static TermOrder grevlex() { return TermOrder(Kind::Grevlex); }
  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder block(const VarSet& vars, std::span<const std::string> eliminate);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& eliminated() const { return eliminated_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  /// For block orders: whether m contains an eliminated variable.
  bool involves_eliminated(const Monomial& m) const;

  nlohmann::json to_json() const;

 private:
  explicit TermOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::string> eliminated_;
  std::vector<std::size_t> elim_idx_;
  std::vector<std::size_t> keep_idx_;
};

}  // namespace jetdisc
