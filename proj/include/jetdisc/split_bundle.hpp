#pragma once

#include <string>
#include <vector>

namespace jetdisc {

/// Degrees (a_1, ..., a_r) of a split bundle O(a_1) + ... + O(a_r) on P^1,
/// kept sorted.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  long degree() const;
  SplittingType dual() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> degrees_;
};

/// { sum of a_j over S : |S| = i }.
SplittingType wedge_split_bundle(const SplittingType& s, int i);

struct CohomologyDims {
  long h0 = 0;
  long h1 = 0;
  long euler() const { return h0 - h1; }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

CohomologyDims cohomology_dims_p1(const SplittingType& s);

struct DoubleComplexRow {
  int i = 0;
  int j = 0;
  int twist = 0;
  long dim = 0;
};

/// Dimensions of C^{i,j} = O(-i) (x) R^j of wedge^i F* for split F on P^1.
struct DoubleComplexTable {
  SplittingType bundle;
  int e_rank = 1;
  std::vector<DoubleComplexRow> rows;
  /// sum over i of (-1)^i (h0 - h1)(wedge^i F*).
  long euler_sum = 0;
  /// Same number from ranks and degrees: sum (-1)^i (C(r,i) - C(r-1,i-1) deg F).
  long euler_closed_form = 0;

  /// Throws DomainError for j outside {0, 1} or i out of range.
  long dim(int i, int j) const;
};

DoubleComplexTable double_complex_table(const SplittingType& bundle, int e_rank);

/// `i,j,twist,dim` rows plus a `# euler_sum=..,closed_form=..` footer.
std::string to_csv(const DoubleComplexTable& table);

}  // namespace jetdisc
