#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "jetdisc/errors.hpp"
#include "jetdisc/incidence.hpp"
#include "jetdisc/koszul.hpp"
#include "jetdisc/poly_ops.hpp"
#include "jetdisc/split_bundle.hpp"
#include "support.hpp"

using namespace jetdisc;
using jetdisc::testing::P;
using jetdisc::testing::random_polynomial;

namespace {

FreeComplex koszul_of(const VarSet& v, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> b;
  for (const char* s : gens) b.push_back(P(s, v));
  return build_koszul({v, b});
}

FreeComplex flip_entry(const FreeComplex& c, std::size_t k, std::size_t r, std::size_t col) {
  std::vector<PolyMatrix> diffs = c.differentials();
  PolyMatrix& d = diffs[k - 1];
  d.set(r, col, -d(r, col));
  return FreeComplex(c.vars(), c.ranks(), diffs, c.twists());
}

// All i-subsets of {0..r-1} as bitmasks.
std::vector<unsigned> subsets_of_size(std::size_t r, int i) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << r); ++m)
    if (std::popcount(m) == i) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("build_koszul examples") {
  VarSet v{"x", "y"};
  FreeComplex one = koszul_of(v, {"x"});
  CHECK(one.length() == 1);
  CHECK(one.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(one.differential(1)(0, 0) == P("x", v));

  FreeComplex two = koszul_of(v, {"x", "y"});
  CHECK(two.ranks() == std::vector<std::size_t>{1, 2, 1});
  const PolyMatrix& d1 = two.differential(1);
  const PolyMatrix& d2 = two.differential(2);
  CHECK(d1.rows() == 1);
  CHECK(d1.cols() == 2);
  CHECK(d1(0, 0) == P("x", v));
  CHECK(d1(0, 1) == P("y", v));
  CHECK(d2.rows() == 2);
  CHECK(d2.cols() == 1);
  CHECK(d2(0, 0) == P("-y", v));
  CHECK(d2(1, 0) == P("x", v));
  CHECK((d1 * d2).is_zero());
  CHECK(two.twists() == std::vector<int>{0, -1, -2});

  IncidenceIdeal inc = incidence_generators({1, 3, 1}, make_chart({1, 3, 1}, 0, 0));
  FreeComplex c = build_koszul({inc.vars(), inc.generators});
  CHECK(c.length() == 2);
  CHECK(c.vars() == VarSet{"u1", "u2", "u3", "t"});
  CHECK(verify_chain(c));
  CHECK(c.differential(1)(0, 0) == inc.generators[0]);
}

TEST_CASE("ranks are binomial coefficients") {
  VarSet v{"a", "b", "c", "d", "e"};
  std::vector<Polynomial> b;
  for (const auto& n : v.names()) b.push_back(Polynomial::variable(v, n));
  FreeComplex c = build_koszul({v, b});
  for (std::size_t k = 0; k <= 5; ++k) CHECK(c.ranks()[k] == binomial(5, static_cast<unsigned>(k)).get_ui());
  CHECK(verify_chain(c));
}

TEST_CASE("verify_chain") {
  VarSet v{"x", "y", "z"};
  FreeComplex c = koszul_of(v, {"x", "y", "z"});
  CHECK(verify_chain(c));
  CHECK_FALSE(verify_chain(flip_entry(c, 2, 0, 0)));
  CHECK_FALSE(verify_chain(flip_entry(c, 1, 0, 2)));
  CHECK_FALSE(verify_chain(flip_entry(c, 3, 1, 0)));
  for (int s = 0; s < 20; ++s) {
    SampleRng rng(51, static_cast<std::uint64_t>(s));
    std::vector<Polynomial> b;
    for (int k = 0; k < 4; ++k) b.push_back(random_polynomial(rng, v, 4, 3));
    CHECK(verify_chain(build_koszul({v, b})));
  }
}

TEST_CASE("FreeComplex shape validation") {
  VarSet v{"x"};
  PolyMatrix wrong(v, 2, 2);
  CHECK_THROWS_AS(FreeComplex(v, {1, 1}, {wrong}), DomainError);
  CHECK_THROWS_AS(FreeComplex(v, {1, 1, 1}, {PolyMatrix(v, 1, 1)}), DomainError);
  PolyMatrix other(VarSet{"y"}, 1, 1);
  CHECK_THROWS_AS(FreeComplex(v, {1, 1}, {other}), VarSetMismatch);
}

TEST_CASE("evaluate_complex and exactness examples") {
  VarSet v{"x", "y"};
  FreeComplex c = koszul_of(v, {"x", "y"});
  auto m = evaluate_complex(c, {{"x", 1}, {"y", 0}});
  REQUIRE(m.size() == 2);
  CHECK(m[0] == RationalMatrix{{1, 0}});
  CHECK(m[1] == RationalMatrix{{0}, {1}});
  ExactnessReport off = exactness_at_point(c, {{"x", 1}, {"y", 0}});
  CHECK(off.exact_at(1));
  CHECK(off.exact());

  ExactnessReport r = exactness_at_point(c, {{"x", 1}, {"y", 1}});
  CHECK(r.homology == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.exact());

  ExactnessReport z = exactness_at_point(c, {{"x", 0}, {"y", 0}});
  CHECK(z.homology[0] == 1);
  CHECK_FALSE(z.exact());
  for (const auto& mat : evaluate_complex(c, {{"x", 0}, {"y", 0}})) CHECK(mat.is_zero());
  CHECK_THROWS_AS(evaluate_complex(c, {{"x", 1}}), DomainError);
}

TEST_CASE("Euler characteristic of pointwise homology is zero") {
  VarSet v{"x", "y", "z"};
  for (int s = 0; s < 30; ++s) {
    SampleRng rng(52, static_cast<std::uint64_t>(s));
    std::vector<Polynomial> b;
    for (int k = 0; k < 3; ++k) b.push_back(random_polynomial(rng, v, 3, 2));
    FreeComplex c = build_koszul({v, b});
    Point p{{"x", rng.scalar(-2, 2)}, {"y", rng.scalar(-2, 2)}, {"z", rng.scalar(-2, 2)}};
    auto rep = exactness_at_point(c, p);
    long chi = 0;
    for (std::size_t k = 0; k < rep.homology.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(rep.homology[k]);
    CHECK(chi == 0);
    bool off = std::any_of(b.begin(), b.end(), [&](const Polynomial& g) { return evaluate(g, p) != 0; });
    CHECK(rep.exact() == off);
  }
}

TEST_CASE("incidence complexes are exact off the locus") {
  for (auto [d, l] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    LinearSystemConfig cfg{1, d, l};
    IncidenceIdeal inc = incidence_generators(cfg, make_chart(cfg, 0, 0));
    FreeComplex c = build_koszul({inc.vars(), inc.generators});
    CHECK(verify_chain(c));
    for (int s = 0; s < 50; ++s) {
      SampleRng rng(53, static_cast<std::uint64_t>(s));
      Point p;
      for (const auto& n : inc.vars().names()) p[n] = rng.scalar();
      bool off = std::any_of(inc.generators.begin(), inc.generators.end(),
                             [&](const Polynomial& g) { return evaluate(g, p) != 0; });
      if (!off) continue;
      CHECK(exactness_at_point(c, p).exact());
    }
  }
}

TEST_CASE("JSON round trip") {
  VarSet v{"x", "y", "z"};
  FreeComplex c = koszul_of(v, {"x + y", "y*z", "z^2 - 1/2"});
  auto j = to_json(c);
  CHECK(j["ranks"] == nlohmann::json({1, 3, 3, 1}));
  CHECK(j["twists"] == nlohmann::json({0, -1, -2, -3}));
  CHECK(j["differentials"].size() == 3);
  FreeComplex back = complex_from_json(j);
  CHECK(back.ranks() == c.ranks());
  for (std::size_t k = 1; k <= 3; ++k) CHECK(back.differential(k) == c.differential(k));
}

TEST_CASE("wedge_split_bundle examples") {
  CHECK(wedge_split_bundle(SplittingType({2, 2}), 2) == SplittingType({4}));
  CHECK(wedge_split_bundle(SplittingType({7}), 0) == SplittingType({0}));
  CHECK(wedge_split_bundle(SplittingType({1, 2, 3}), 2) == SplittingType({3, 4, 5}));
  CHECK_THROWS_AS(wedge_split_bundle(SplittingType({1, 2}), 3), DomainError);
  CHECK_THROWS_AS(wedge_split_bundle(SplittingType({1, 2}), -1), DomainError);
  CHECK(SplittingType({3, -1}).dual() == SplittingType({-3, 1}));
  CHECK(SplittingType({3, -1}).degree() == 2);
}

TEST_CASE("cohomology_dims_p1 examples") {
  CHECK(cohomology_dims_p1(SplittingType({0})) == CohomologyDims{1, 0});
  CHECK(cohomology_dims_p1(SplittingType({-1})) == CohomologyDims{0, 0});
  CHECK(cohomology_dims_p1(SplittingType({-3, 2})) == CohomologyDims{3, 2});
  CHECK(cohomology_dims_p1(SplittingType({-4})) == CohomologyDims{0, 3});
}

TEST_CASE("double_complex_table examples") {
  auto t1 = double_complex_table(SplittingType({3}), 1);
  REQUIRE(t1.rows.size() == 4);
  CHECK(t1.dim(0, 0) == 1);
  CHECK(t1.dim(0, 1) == 0);
  CHECK(t1.dim(1, 0) == 0);
  CHECK(t1.dim(1, 1) == 2);

  auto t = double_complex_table(SplittingType({2, 2}), 2);
  CHECK(t.dim(2, 0) == 0);
  CHECK(t.dim(2, 1) == 3);
  CHECK(t.rows.size() == 6);
  CHECK(t.euler_sum == t.euler_closed_form);
  CHECK_THROWS_AS(t.dim(0, 2), DomainError);
  CHECK_THROWS_AS(t.dim(3, 0), DomainError);
  std::string csv = to_csv(t);
  CHECK(csv.rfind("i,j,twist,dim\n", 0) == 0);
  CHECK(csv.find("2,1,-2,3\n") != std::string::npos);
  CHECK(csv.find("# euler_sum=0,closed_form=0") != std::string::npos);

  auto zero = double_complex_table(SplittingType({0}), 1);
  CHECK(zero.dim(0, 0) == 1);
  CHECK(zero.dim(1, 0) == 1);
  CHECK(zero.dim(1, 1) == 0);
}

TEST_CASE("wedges and Euler sums match subset enumeration") {
  for (int s = 0; s < 40; ++s) {
    SampleRng rng(54, static_cast<std::uint64_t>(s));
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<int> a(r);
    for (auto& x : a) x = rng.uniform(-5, 5);
    SplittingType st(a);
    long expected_sum = 0;
    for (int i = 0; i <= static_cast<int>(r); ++i) {
      std::vector<int> brute;
      long chi = 0;
      for (unsigned m : subsets_of_size(r, i)) {
        int deg = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (m & (1u << j)) deg -= a[j];
        brute.push_back(deg);
        chi += 1 + deg;
      }
      CHECK(wedge_split_bundle(st.dual(), i) == SplittingType(brute));
      expected_sum += (i % 2 ? -1 : 1) * chi;
    }
    auto table = double_complex_table(st, 2);
    CHECK(table.euler_sum == expected_sum);
    CHECK(table.euler_closed_form == expected_sum);
  }
}
