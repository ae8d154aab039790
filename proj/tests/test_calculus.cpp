#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetdisc/errors.hpp"
#include "jetdisc/multi_index.hpp"
#include "jetdisc/poly_ops.hpp"
#include "jetdisc/taylor.hpp"
#include "support.hpp"

using namespace jetdisc;
using jetdisc::testing::P;
using jetdisc::testing::random_polynomial;

namespace {

// Drops every term of total degree > order in the listed variables.
Polynomial truncate_in(const Polynomial& f, const std::vector<std::string>& diffs, int order) {
  std::vector<std::size_t> idx;
  for (const auto& d : diffs) idx.push_back(f.vars().index(d));
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    int deg = 0;
    for (auto k : idx) deg += t.monomial[k];
    if (deg <= order) kept.push_back(t);
  }
  return Polynomial(f.vars(), kept);
}

}  // namespace

TEST_CASE("enumerate_multiindices examples") {
  auto a = enumerate_multiindices(2, 1);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == MultiIndex({0, 0}));
  CHECK(a[1] == MultiIndex({1, 0}));
  CHECK(a[2] == MultiIndex({0, 1}));
  auto b = enumerate_multiindices(1, 3);
  REQUIRE(b.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(b[static_cast<std::size_t>(k)] == MultiIndex({k}));

  // Brute-force count over nested loops.
  std::size_t brute = 0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k)
        if (i + j + k <= 2) ++brute;
  CHECK(enumerate_multiindices(3, 2).size() == brute);
  CHECK(brute == 10);
  CHECK_THROWS_AS(enumerate_multiindices(0, 3), DomainError);
  CHECK(MultiIndex({2, 3}).factorial() == 12);
  CHECK(MultiIndex({2, 3}).order() == 5);
  CHECK_THROWS_AS(MultiIndex({-1}), DomainError);
}

TEST_CASE("multi-index enumeration is graded and without repeats") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m) {
      auto all = enumerate_multiindices(k, m);
      CHECK(all.size() == binomial(static_cast<unsigned>(k + static_cast<std::size_t>(m)), static_cast<unsigned>(k)).get_ui());
      for (std::size_t a = 0; a + 1 < all.size(); ++a) CHECK(all[a].order() <= all[a + 1].order());
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) CHECK_FALSE(all[a] == all[b]);
    }
}

TEST_CASE("scaled_partial examples") {
  VarSet v{"u1", "u2"};
  std::vector<std::string> vars{"u1", "u2"};
  Polynomial f = P("u1^2*u2^3", v);
  CHECK(scaled_partial(f, vars, MultiIndex({1, 0})) == P("2*u1*u2^3", v));
  CHECK(scaled_partial(f, vars, MultiIndex({2, 3})) == P("1", v));
  CHECK(scaled_partial(f, vars, MultiIndex({0, 0})) == f);
  CHECK(scaled_partial(f, vars, MultiIndex({3, 0})).is_zero());
  CHECK_THROWS_AS(scaled_partial(f, vars, MultiIndex({1})), DomainError);
}

TEST_CASE("scaled_partial matches the product of binomials") {
  VarSet v{"a", "b", "c"};
  std::vector<std::string> vars{"a", "b", "c"};
  for (int s = 0; s < 200; ++s) {
    SampleRng rng(21, static_cast<std::uint64_t>(s));
    std::vector<int> p{rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)};
    std::vector<int> i{rng.uniform(0, 6), rng.uniform(0, 6), rng.uniform(0, 6)};
    Scalar coef = 1;
    std::vector<int> rest(3);
    bool zero = false;
    for (int j = 0; j < 3; ++j) {
      if (i[j] > p[j]) zero = true;
      else {
        coef *= Scalar(binomial(static_cast<unsigned>(p[j]), static_cast<unsigned>(i[j])));
        rest[j] = p[j] - i[j];
      }
    }
    Polynomial expected = zero ? Polynomial(v) : Polynomial::monomial(v, Monomial(rest), coef);
    CHECK(scaled_partial(Polynomial::monomial(v, Monomial(p)), vars, MultiIndex(i)) == expected);
  }
}

TEST_CASE("taylor_shift examples") {
  std::vector<std::string> tv{"t"};
  auto shift = default_differentials(tv);
  CHECK(shift[0].differential == "dt");
  CHECK(taylor_shift(P("t^2", VarSet{"t"}), shift) == P("t^2 + 2*t*dt + dt^2", VarSet{"t", "dt"}));

  std::vector<std::string> uv{"u1", "u2"};
  Polynomial g = taylor_shift(P("u1*u2", VarSet{"u1", "u2"}), default_differentials(uv));
  CHECK(g == P("u1*u2 + u2*du1 + u1*du2 + du1*du2", VarSet{"u1", "u2", "du1", "du2"}));

  Polynomial c = taylor_shift(P("7", VarSet{"t"}), shift);
  CHECK(c.is_constant());
  CHECK(c.constant_term() == 7);

  std::vector<ShiftVar> clash{{"t", "t"}};
  CHECK_THROWS_AS(taylor_shift(P("t", VarSet{"t"}), clash), DomainError);
  std::vector<ShiftVar> clash2{{"t", "u"}};
  CHECK_THROWS_AS(taylor_shift(P("t + u", VarSet{"t", "u"}), clash2), DomainError);
}

TEST_CASE("taylor_shift equals substitution u -> u + du") {
  VarSet v{"x", "y", "z"};
  std::vector<std::string> vars{"x", "y"};
  auto shift = default_differentials(vars);
  VarSet ext{"x", "y", "z", "dx", "dy"};
  for (int s = 0; s < 100; ++s) {
    SampleRng rng(22, static_cast<std::uint64_t>(s));
    Polynomial f = random_polynomial(rng, v, 6, 4);
    Bindings b{{"x", P("x + dx", ext)}, {"y", P("y + dy", ext)}};
    CHECK(taylor_shift(f, shift) == substitute(f, b, ext));
  }
}

TEST_CASE("taylor_truncate examples") {
  VarSet t{"t"};
  std::vector<std::string> tv{"t"};
  auto shift = default_differentials(tv);
  VarSet td{"t", "dt"};
  JetPolynomial j1 = taylor_truncate(P("t^3", t), shift, 1);
  CHECK(j1.poly() == P("t^3 + 3*t^2*dt", td));
  CHECK(j1.order_zero() == P("t^3", t));
  CHECK(j1.component(MultiIndex({1})) == P("3*t^2", t));
  CHECK(taylor_truncate(P("t^3", t), shift, 0).poly() == P("t^3", td));

  VarSet u{"u0", "u1", "u2", "t"};
  JetPolynomial j = taylor_truncate(P("u0 + u1*t + u2*t^2", u), shift, 1);
  CHECK(j.poly() == P("u0 + u1*t + u2*t^2 + u1*dt + 2*u2*t*dt", VarSet{"u0", "u1", "u2", "t", "dt"}));
  CHECK(j.component(MultiIndex({1})) == P("u1 + 2*u2*t", u));

  CHECK_THROWS_AS(taylor_truncate(P("t", t), shift, -1), DomainError);
}

TEST_CASE("taylor_truncate equals shift then filter") {
  VarSet v{"x", "y"};
  std::vector<std::string> vars{"x", "y"};
  auto shift = default_differentials(vars);
  for (int s = 0; s < 60; ++s) {
    SampleRng rng(23, static_cast<std::uint64_t>(s));
    Polynomial f = random_polynomial(rng, v, 5, 5);
    int order = rng.uniform(0, 4);
    CHECK(taylor_truncate(f, shift, order).poly() == truncate_in(taylor_shift(f, shift), {"dx", "dy"}, order));
  }
}

TEST_CASE("taylor_fiber examples") {
  VarSet t{"t"};
  CHECK(taylor_fiber(P("t^2", t), {{"t", 1}}, 1) == P("2*t - 1", t));
  CHECK(taylor_fiber(P("t^2", t), {{"t", 0}}, 2) == P("t^2", t));
  Polynomial expected = P("2*t - 2", t) + 3 * P("t - 1", t).pow(2);
  CHECK(taylor_fiber(P("t^3 - t", t), {{"t", 1}}, 2) == expected);
  CHECK(taylor_fiber(P("t^2", t), {{"t", Scalar(1, 2)}}, 5) == P("t^2", t));
  CHECK_THROWS_AS(taylor_fiber(P("t", t), Point{}, 1), DomainError);
}

TEST_CASE("taylor_fiber equals substitution t = a + s, truncation, back-substitution") {
  VarSet v{"x", "y"};
  VarSet sv{"sx", "sy"};
  for (int s = 0; s < 60; ++s) {
    SampleRng rng(24, static_cast<std::uint64_t>(s));
    Polynomial f = random_polynomial(rng, v, 5, 4);
    Scalar a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    int order = rng.uniform(0, 4);
    Bindings shift{{"x", P("sx", sv) + Polynomial::constant(sv, a)}, {"y", P("sy", sv) + Polynomial::constant(sv, b)}};
    Polynomial in_s = truncate_in(substitute(f, shift, sv), {"sx", "sy"}, order);
    Bindings back{{"sx", P("x", v) - Polynomial::constant(v, a)}, {"sy", P("y", v) - Polynomial::constant(v, b)}};
    CHECK(taylor_fiber(f, {{"x", a}, {"y", b}}, order) == substitute(in_s, back, v));
  }
}
