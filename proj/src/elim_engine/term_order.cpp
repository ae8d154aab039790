#include "jetdisc/term_order.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"

namespace jetdisc {

namespace {

int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& idx) {
  int da = 0, db = 0;
  for (auto k : idx) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t j = idx.size(); j-- > 0;) {
    auto k = idx[j];
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::block(const VarSet& vars, std::span<const std::string> eliminate) {
  TermOrder order(Kind::Block);
  std::vector<bool> mask(vars.size(), false);
  for (const auto& name : eliminate) mask[vars.index(name)] = true;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (mask[k]) {
      order.elim_idx_.push_back(k);
      order.eliminated_.push_back(vars.name(k));
    } else {
      order.keep_idx_.push_back(k);
    }
  }
  return order;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      return 0;
    case Kind::Block: {
      if (elim_idx_.size() + keep_idx_.size() != a.size())
        throw VarSetMismatch("block order applied to monomials over a different VarSet");
      int c = grevlex_on(a, b, elim_idx_);
      return c != 0 ? c : grevlex_on(a, b, keep_idx_);
    }
  }
  return 0;
}

bool TermOrder::involves_eliminated(const Monomial& m) const {
  return std::any_of(elim_idx_.begin(), elim_idx_.end(), [&](std::size_t k) { return m[k] > 0; });
}

nlohmann::json TermOrder::to_json() const {
  switch (kind_) {
    case Kind::Grevlex:
      return {{"kind", "grevlex"}};
    case Kind::Lex:
      return {{"kind", "lex"}};
    case Kind::Block:
      return {{"kind", "block"}, {"eliminate", eliminated_}};
  }
  return {};
}

}  // namespace jetdisc
