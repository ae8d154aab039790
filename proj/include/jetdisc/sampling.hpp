#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "jetdisc/incidence.hpp"

namespace jetdisc {

/// Seeded generator for randomized checks. The (seed, stream) pair fully
/// determines the sequence.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0);

  int uniform(int lo, int hi);
  Scalar scalar(int lo = -10, int hi = 10) { return Scalar(uniform(lo, hi)); }
  /// Primitive integer point (alpha : beta) with entries in [-10, 10],
  /// normalized so the first nonzero entry is positive.
  ProjectivePoint p1_point();
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

bool same_p1_point(const ProjectivePoint& a, const ProjectivePoint& b);

/// Binary form c * prod (beta_k x0 - alpha_k x1)^{m_k} [* irreducible quadratic]
/// with distinct random roots; the multiplicities are therefore exact.
struct FactoredForm {
  Polynomial form;
  std::vector<std::pair<ProjectivePoint, int>> roots;
  bool has_quadratic = false;
  /// Largest root multiplicity over the algebraic closure.
  int max_multiplicity() const;
};

/// Degree = sum of multiplicities + (with_quadratic ? 2 : 0).
FactoredForm random_factored_form(SampleRng& rng, const std::vector<int>& multiplicities, bool with_quadratic);

/// Random multiplicity list summing to `total` with every entry in [1, cap].
std::vector<int> random_multiplicities(SampleRng& rng, int total, int cap);

}  // namespace jetdisc
