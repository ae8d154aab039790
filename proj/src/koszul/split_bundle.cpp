#include "jetdisc/split_bundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jetdisc/errors.hpp"
#include "jetdisc/scalar.hpp"

namespace jetdisc {

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
}

long SplittingType::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

SplittingType SplittingType::dual() const {
  std::vector<int> neg;
  for (int a : degrees_) neg.push_back(-a);
  return SplittingType(std::move(neg));
}

SplittingType wedge_split_bundle(const SplittingType& s, int i) {
  const int r = static_cast<int>(s.rank());
  if (i < 0 || i > r) throw DomainError("wedge power out of range");
  std::vector<int> out;
  const auto& a = s.degrees();
  // Walk all i-subsets via a selection mask.
  std::vector<bool> pick(static_cast<std::size_t>(r), false);
  std::fill(pick.begin(), pick.begin() + i, true);
  do {
    int sum = 0;
    for (int j = 0; j < r; ++j)
      if (pick[static_cast<std::size_t>(j)]) sum += a[static_cast<std::size_t>(j)];
    out.push_back(sum);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return SplittingType(std::move(out));
}

CohomologyDims cohomology_dims_p1(const SplittingType& s) {
  CohomologyDims c;
  for (int a : s.degrees()) {
    c.h0 += std::max(a + 1, 0);
    c.h1 += std::max(-a - 1, 0);
  }
  return c;
}

long DoubleComplexTable::dim(int i, int j) const {
  if (j != 0 && j != 1) throw DomainError("higher direct images R^j on P^1 exist only for j in {0, 1}");
  for (const auto& row : rows)
    if (row.i == i && row.j == j) return row.dim;
  throw DomainError("double complex index i out of range");
}

DoubleComplexTable double_complex_table(const SplittingType& bundle, int e_rank) {
  if (bundle.rank() == 0) throw DomainError("double complex of an empty splitting type");
  if (e_rank < 1) throw DomainError("rank of E must be positive");
  DoubleComplexTable table;
  table.bundle = bundle;
  table.e_rank = e_rank;
  const int r = static_cast<int>(bundle.rank());
  SplittingType dual = bundle.dual();
  for (int i = 0; i <= r; ++i) {
    CohomologyDims h = cohomology_dims_p1(wedge_split_bundle(dual, i));
    table.rows.push_back({i, 0, -i, h.h0});
    table.rows.push_back({i, 1, -i, h.h1});
    long sign = i % 2 == 0 ? 1 : -1;
    table.euler_sum += sign * h.euler();
    long rank_i = binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)).get_si();
    long deg_factor = i == 0 ? 0 : binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(i - 1)).get_si();
    table.euler_closed_form += sign * (rank_i - deg_factor * bundle.degree());
  }
  return table;
}

std::string to_csv(const DoubleComplexTable& table) {
  std::ostringstream out;
  out << "i,j,twist,dim\n";
  for (const auto& row : table.rows) out << row.i << ',' << row.j << ',' << row.twist << ',' << row.dim << '\n';
  out << "# euler_sum=" << table.euler_sum << ",closed_form=" << table.euler_closed_form << '\n';
  return out.str();
}

}  // namespace jetdisc
