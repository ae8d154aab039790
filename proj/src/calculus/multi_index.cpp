#include "jetdisc/multi_index.hpp"

#include <numeric>

#include "jetdisc/errors.hpp"

namespace jetdisc {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
  order_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (int e : entries_) r *= jetdisc::factorial(static_cast<unsigned>(e));
  return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw DomainError("multi-index length mismatch");
  std::vector<int> e(entries_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += other.entries_[j];
  return MultiIndex(std::move(e));
}

namespace {

void fill(std::size_t slot, int remaining, std::vector<int>& current, std::vector<MultiIndex>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[slot] = e;
    fill(slot + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> multiindices_of_order(std::size_t k, int m) {
  if (k == 0) throw DomainError("multi-indices need at least one slot");
  if (m < 0) throw DomainError("order must be non-negative");
  std::vector<MultiIndex> out;
  std::vector<int> current(k, 0);
  fill(0, m, current, out);
  return out;
}

std::vector<MultiIndex> enumerate_multiindices(std::size_t k, int max_order) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= max_order; ++m) {
    auto layer = multiindices_of_order(k, m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace jetdisc
