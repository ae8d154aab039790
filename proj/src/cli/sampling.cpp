#include "jetdisc/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "jetdisc/errors.hpp"

namespace jetdisc {

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

int SampleRng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

ProjectivePoint SampleRng::p1_point() {
  while (true) {
    int a = uniform(-10, 10), b = uniform(-10, 10);
    if (a == 0 && b == 0) continue;
    if (std::gcd(a, b) != 1) continue;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    return {Scalar(a), Scalar(b)};
  }
}

bool same_p1_point(const ProjectivePoint& a, const ProjectivePoint& b) { return a.alpha * b.beta == a.beta * b.alpha; }

int FactoredForm::max_multiplicity() const {
  int m = has_quadratic ? 1 : 0;
  for (const auto& r : roots) m = std::max(m, r.second);
  return m;
}

FactoredForm random_factored_form(SampleRng& rng, const std::vector<int>& multiplicities, bool with_quadratic) {
  const VarSet& vars = binary_form_vars();
  FactoredForm out;
  int scale = 0;
  while (scale == 0) scale = rng.uniform(-5, 5);
  out.form = Polynomial::constant(vars, scale);
  for (int m : multiplicities) {
    if (m < 1) throw DomainError("root multiplicities must be positive");
    ProjectivePoint p;
    bool fresh = false;
    while (!fresh) {
      p = rng.p1_point();
      fresh = std::none_of(out.roots.begin(), out.roots.end(),
                           [&](const auto& r) { return same_p1_point(r.first, p); });
    }
    out.form *= linear_form_vanishing_at(p).pow(static_cast<unsigned>(m));
    out.roots.emplace_back(p, m);
  }
  if (with_quadratic) {
    // a*x0^2 + b*x1^2 with a, b > 0 has no real, hence no rational, root.
    Scalar a = rng.uniform(1, 5), b = rng.uniform(1, 5);
    out.form *= binary_form({a, 0, b});
    out.has_quadratic = true;
  }
  return out;
}

std::vector<int> random_multiplicities(SampleRng& rng, int total, int cap) {
  if (total < 0 || cap < 1) throw DomainError("invalid multiplicity budget");
  std::vector<int> out;
  while (total > 0) {
    int m = rng.uniform(1, std::min(cap, total));
    out.push_back(m);
    total -= m;
  }
  return out;
}

}  // namespace jetdisc
