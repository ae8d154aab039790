#pragma once

#include <cstddef>
#include <vector>

#include "jetdisc/scalar.hpp"

namespace jetdisc {

/// Exponent tuple I = (i_1, ..., i_k) indexing partial derivatives.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }
  /// #I
  int order() const { return order_; }
  /// I!
  Integer factorial() const;

  MultiIndex operator+(const MultiIndex& other) const;
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

/// All I over k slots with #I = m, lexicographically descending
/// ((m,0,..) first).
std::vector<MultiIndex> multiindices_of_order(std::size_t k, int m);

/// All I over k slots with #I <= max_order in graded lexicographic order.
std::vector<MultiIndex> enumerate_multiindices(std::size_t k, int max_order);

}  // namespace jetdisc
