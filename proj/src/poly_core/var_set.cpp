#include "jetdisc/var_set.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "jetdisc/errors.hpp"

namespace jetdisc {

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VarSet::VarSet() : data_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_valid_variable_name(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names)});
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  const auto& names = data_->names;
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return k;
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  auto k = find(name);
  if (!k) throw UnknownVariable(std::string(name));
  return *k;
}

VarSet VarSet::extended(std::span<const std::string> extra) const {
  std::vector<std::string> names = data_->names;
  names.insert(names.end(), extra.begin(), extra.end());
  return VarSet(std::move(names));
}

VarSet VarSet::without(std::span<const std::string> removed) const {
  std::vector<std::string> names;
  for (const auto& n : data_->names)
    if (std::find(removed.begin(), removed.end(), n) == removed.end()) names.push_back(n);
  return VarSet(std::move(names));
}

bool operator==(const VarSet& a, const VarSet& b) {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

}  // namespace jetdisc
