#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "jetdisc/matrix.hpp"

namespace jetdisc {

/// Components b_1, ..., b_f of a section in a local trivialization.
struct SectionData {
  VarSet vars;
  std::vector<Polynomial> components;
};

/// Koszul complex 0 -> A^{C(f,f)} -> ... -> A^{C(f,1)} -> A^{C(f,0)} = A.
///
/// Term k has basis e_S, |S| = k, S in lexicographic order; differential d_k
/// maps term k to term k-1 and is stored as a C(f,k-1) x C(f,k) matrix.
class FreeComplex {
 public:
  /// ranks[k] for k = 0..f, differentials[k-1] = d_k, twists[k] = -k by default.
  /// Throws DomainError when matrix shapes do not match the ranks.
  FreeComplex(VarSet vars, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials,
              std::vector<int> twists = {});

  const VarSet& vars() const { return vars_; }
  /// Number of section components f (the complex has f+1 terms).
  std::size_t length() const { return differentials_.size(); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d_k for 1 <= k <= length().
  const PolyMatrix& differential(std::size_t k) const { return differentials_.at(k - 1); }
  const std::vector<PolyMatrix>& differentials() const { return differentials_; }
  const std::vector<int>& twists() const { return twists_; }

 private:
  VarSet vars_;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> differentials_;
  std::vector<int> twists_;
};

/// d(e_S) = sum over j in S of (-1)^{pos(j, S)} b_j e_{S \ j}.
FreeComplex build_koszul(const SectionData& section);

/// Every d_{k-1} * d_k is the zero matrix.
bool verify_chain(const FreeComplex& complex);

std::vector<RationalMatrix> evaluate_complex(const FreeComplex& complex, const Point& point);

struct ExactnessReport {
  /// homology[k] = C(f,k) - rank d_k - rank d_{k+1}, k = 0..f.
  std::vector<std::size_t> homology;
  std::vector<std::size_t> differential_ranks;

  bool exact_at(std::size_t k) const { return homology.at(k) == 0; }
  /// Exact at every spot 1..f-1.
  bool interior_exact() const;
  /// Exact everywhere, including the augmented cokernel at spot 0.
  bool exact() const;
};

ExactnessReport exactness_at_point(const FreeComplex& complex, const Point& point);

/// `{"ranks":[r_0..r_f],"differentials":[d_1..d_f],"twists":[0,-1,...]}`
nlohmann::json to_json(const FreeComplex& complex);
FreeComplex complex_from_json(const nlohmann::json& j);

}  // namespace jetdisc
