#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jetdisc {

/// Ordered list of distinct variable names. Cheap to copy (shared, immutable
/// storage); equality is by name list.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  bool empty() const { return size() == 0; }
  const std::string& name(std::size_t index) const { return data_->names[index]; }
  const std::vector<std::string>& names() const { return data_->names; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// New set with `extra` appended; throws DomainError on a collision.
  VarSet extended(std::span<const std::string> extra) const;
  VarSet without(std::span<const std::string> removed) const;

  friend bool operator==(const VarSet& a, const VarSet& b);

 private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// True for names matching `[A-Za-z][A-Za-z0-9_]*`.
bool is_valid_variable_name(std::string_view name);

}  // namespace jetdisc
