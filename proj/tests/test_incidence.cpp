#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetdisc/errors.hpp"
#include "jetdisc/incidence.hpp"
#include "jetdisc/poly_ops.hpp"
#include "support.hpp"

using namespace jetdisc;
using jetdisc::testing::P;

TEST_CASE("config validation and counts") {
  CHECK_NOTHROW(LinearSystemConfig{1, 3, 3}.validate());
  CHECK_THROWS_AS((LinearSystemConfig{0, 3, 1}.validate()), DomainError);
  CHECK_THROWS_AS((LinearSystemConfig{1, 0, 0}.validate()), DomainError);
  CHECK_THROWS_AS((LinearSystemConfig{1, 2, 3}.validate()), DomainError);
  CHECK_THROWS_AS((LinearSystemConfig{1, 2, -1}.validate()), DomainError);
  CHECK(LinearSystemConfig{2, 2, 1}.section_dimension() == 6);
  CHECK(LinearSystemConfig{2, 2, 1}.jet_rank() == 3);
  CHECK(LinearSystemConfig{3, 4, 2}.jet_rank() == 10);
  auto mons = degree_monomials(1, 3);
  REQUIRE(mons.size() == 4);
  CHECK(mons[0] == std::vector<int>{3, 0});
  CHECK(mons[3] == std::vector<int>{0, 3});
  CHECK(degree_monomials(2, 2).size() == 6);
}

TEST_CASE("charts") {
  LinearSystemConfig c{1, 2, 1};
  Chart ch = make_chart(c, 1, 1);
  CHECK(ch.p == std::vector<int>{1, 1});
  CHECK(ch.i == 1);
  CHECK(y_index_of(c, ch) == 1);
  CHECK_THROWS_AS(make_chart(c, 3, 0), DomainError);
  CHECK_THROWS_AS(make_chart(c, 0, 2), DomainError);
  CHECK_THROWS_AS(validate_chart(c, Chart{{1, 0}, 0}), DomainError);
  CHECK(coefficient_variable(1, {1, 2}) == "u2");
  CHECK(coefficient_variable(2, {1, 0, 1}) == "u_1_0_1");
  CHECK(affine_variables(1, 0) == std::vector<std::string>{"t"});
  CHECK(affine_variables(1, 1) == std::vector<std::string>{"s"});
  CHECK(affine_variables(2, 1) == std::vector<std::string>{"t0", "t2"});
}

TEST_CASE("generic_section examples") {
  GenericSection a = generic_section({1, 2, 1}, make_chart({1, 2, 1}, 0, 0));
  CHECK(a.poly == P("1 + u1*t + u2*t^2", VarSet{"u1", "u2", "t"}));

  GenericSection b = generic_section({1, 1, 0}, make_chart({1, 1, 0}, 1, 0));
  CHECK(b.poly == P("u0 + t", VarSet{"u0", "t"}));

  GenericSection c = generic_section({2, 2, 1}, make_chart({2, 2, 1}, 0, 0));
  VarSet v{"u_1_1_0", "u_1_0_1", "u_0_2_0", "u_0_1_1", "u_0_0_2", "t1", "t2"};
  CHECK(c.poly == P("1 + u_1_1_0*t1 + u_1_0_1*t2 + u_0_2_0*t1^2 + u_0_1_1*t1*t2 + u_0_0_2*t2^2", v));
  CHECK(c.coefficient_vars.size() == 5);
  CHECK(c.affine_vars == std::vector<std::string>{"t1", "t2"});
}

TEST_CASE("incidence_generators examples") {
  IncidenceIdeal a = incidence_generators({1, 3, 1}, make_chart({1, 3, 1}, 0, 0));
  VarSet v{"u1", "u2", "u3", "t"};
  REQUIRE(a.generators.size() == 2);
  CHECK(a.generators[0] == P("1 + u1*t + u2*t^2 + u3*t^3", v));
  CHECK(a.generators[1] == P("u1 + 2*u2*t + 3*u3*t^2", v));

  IncidenceIdeal b = incidence_generators({1, 2, 0}, make_chart({1, 2, 0}, 0, 0));
  CHECK(b.generators.size() == 1);

  IncidenceIdeal c = incidence_generators({2, 2, 1}, make_chart({2, 2, 1}, 0, 0));
  REQUIRE(c.generators.size() == 3);
  const Polynomial& f = c.generators[0];
  CHECK(c.generators[1] == partial_derivative(f, "t1"));
  CHECK(c.generators[2] == partial_derivative(f, "t2"));

  // Order-2 generators are halved second derivatives.
  IncidenceIdeal d = incidence_generators({1, 3, 2}, make_chart({1, 3, 2}, 0, 0));
  REQUIRE(d.generators.size() == 3);
  CHECK(d.generators[2] == Scalar(1, 2) * partial_derivative(partial_derivative(d.generators[0], "t"), "t"));

  CHECK_THROWS_AS(incidence_generators({1, 2, 3}, Chart{{2, 0}, 0}), DomainError);
}

TEST_CASE("generator counts on P^n") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int l = 0; l <= d; ++l) {
        LinearSystemConfig c{n, d, l};
        IncidenceIdeal ideal = incidence_generators(c, make_chart(c, 0, 0));
        CHECK(ideal.generators.size() == c.jet_rank());
        CHECK(ideal.vars().size() == c.section_dimension() - 1 + static_cast<std::size_t>(n));
      }
}

TEST_CASE("p1_second_chart_generators examples") {
  IncidenceIdeal a = p1_second_chart_generators({1, 2, 1}, 2);
  VarSet v{"u0", "u1", "s"};
  REQUIRE(a.generators.size() == 2);
  CHECK(a.generators[0] == P("u0*s^2 + u1*s + 1", v));
  CHECK(a.generators[1] == P("2*u0*s + u1", v));
  IncidenceIdeal b = p1_second_chart_generators({1, 1, 0}, 1);
  REQUIRE(b.generators.size() == 1);
  CHECK(b.generators[0] == P("u0*s + 1", VarSet{"u0", "s"}));
  CHECK_THROWS_AS(p1_second_chart_generators({2, 1, 0}, 0), DomainError);
}

TEST_CASE("binary forms and root_multiplicity examples") {
  const VarSet& x = binary_form_vars();
  Polynomial F = P("x1 - x0", x).pow(2) * P("x1 + x0", x);
  CHECK(root_multiplicity(F, {1, 1}) == 2);
  CHECK(root_multiplicity(F, {1, -1}) == 1);
  CHECK(root_multiplicity(F, {2, 1}) == 0);
  for (unsigned d = 1; d <= 4; ++d) {
    Polynomial G = P("x0", x).pow(d);
    CHECK(root_multiplicity(G, {0, 1}) == static_cast<int>(d));
    CHECK(root_multiplicity(G, {1, 0}) == 0);
  }
  CHECK(root_multiplicity(P("x0^2*x1 - 2*x0*x1^2 + x1^3", x), {1, 1}) == 2);
  CHECK(root_multiplicity(F, {3, 3}) == 2);
  CHECK_THROWS_AS(root_multiplicity(P("x0^2 + x1", x), {1, 1}), DomainError);
  CHECK_THROWS_AS(root_multiplicity(F, {0, 0}), DomainError);
  CHECK_THROWS_AS(root_multiplicity(Polynomial(x), {1, 1}), DomainError);

  CHECK(binary_form_coefficients(P("2*x0^2 - x0*x1 + 5*x1^2", x)) == std::vector<Scalar>{2, -1, 5});
  CHECK(binary_form({2, -1, 5}) == P("2*x0^2 - x0*x1 + 5*x1^2", x));
  CHECK(linear_form_vanishing_at({2, 3}) == P("3*x0 - 2*x1", x));
}

TEST_CASE("incidence_membership examples") {
  const VarSet& x = binary_form_vars();
  Polynomial F = P("x1 - x0", x).pow(2) * P("x1 + x0", x);
  CHECK(incidence_membership(F, {1, 1}, {1, 3, 1}));
  CHECK_FALSE(incidence_membership(F, {1, -1}, {1, 3, 1}));
  Polynomial G = P("x1 - x0", x).pow(3);
  CHECK(incidence_membership(G, {1, 1}, {1, 3, 2}));
  CHECK_FALSE(incidence_membership(G, {1, 1}, {1, 3, 3}));
  // Root at (0:1) is off the x0-chart, so the other chart is used.
  Polynomial H = P("x0^2*x1", x);
  CHECK(incidence_membership(H, {0, 1}, {1, 3, 1}));
  CHECK_FALSE(incidence_membership(H, {0, 1}, {1, 3, 2}));
  CHECK(incidence_membership(H, {1, 0}, {1, 3, 0}));
  CHECK_FALSE(incidence_membership(H, {1, 0}, {1, 3, 1}));
  CHECK_THROWS_AS(incidence_membership_on_chart(H, {0, 1}, {1, 3, 1}, 0), DomainError);
  CHECK_THROWS_AS(incidence_membership(F, {1, 1}, {1, 2, 1}), DomainError);
}

TEST_CASE("membership agrees with known root multiplicities") {
  int checked = 0;
  for (int s = 0; s < 150; ++s) {
    SampleRng rng(31, static_cast<std::uint64_t>(s));
    int d = rng.uniform(1, 4);
    bool quad = d >= 2 && rng.uniform(0, 2) == 0;
    auto mults = random_multiplicities(rng, d - (quad ? 2 : 0), d);
    FactoredForm form = random_factored_form(rng, mults, quad);
    REQUIRE(form.form.degree() == d);
    for (const auto& [root, m] : form.roots) {
      CHECK(root_multiplicity(form.form, root) == m);
      for (int l = 0; l <= d; ++l) {
        CHECK(incidence_membership(form.form, root, {1, d, l}) == (m >= l + 1));
        ++checked;
      }
    }
    ProjectivePoint other = rng.p1_point();
    bool is_root = std::any_of(form.roots.begin(), form.roots.end(),
                               [&](const auto& r) { return same_p1_point(r.first, other); });
    if (!is_root) {
      CHECK(root_multiplicity(form.form, other) == 0);
      CHECK_FALSE(incidence_membership(form.form, other, {1, d, 0}));
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("coefficient points and section_vanishing_at") {
  const VarSet& x = binary_form_vars();
  Polynomial F = P("2*x0^2 - x0*x1 + 4*x1^2", x);
  CHECK(preferred_y_index(F) == 0);
  Point p = coefficient_point(F, {1, 2, 1}, 0);
  CHECK(p.at("u1") == Scalar(-1, 2));
  CHECK(p.at("u2") == 2);
  CHECK_THROWS_AS(coefficient_point(P("x0*x1", x), {1, 2, 1}, 0), DomainError);
  CHECK(preferred_y_index(P("x0*x1", x)) == 1);

  for (int s = 0; s < 30; ++s) {
    SampleRng rng(32, static_cast<std::uint64_t>(s));
    int d = rng.uniform(2, 4), l = rng.uniform(0, d - 1);
    LinearSystemConfig c{1, d, l};
    IncidenceIdeal ideal = incidence_generators(c, make_chart(c, 0, 0));
    Point where{{"t", rng.scalar()}};
    std::vector<Scalar> free;
    for (int k = 0; k < d; ++k) free.push_back(rng.scalar());
    auto u = section_vanishing_at(ideal, where, free);
    // f(0) = u0 = 1 on this chart.
    if (where.at("t") == 0) {
      CHECK_FALSE(u);
      continue;
    }
    REQUIRE(u);
    u->insert(where.begin(), where.end());
    for (const auto& g : ideal.generators) CHECK(evaluate(g, *u) == 0);
  }
}

TEST_CASE("incidence JSON") {
  IncidenceIdeal a = incidence_generators({1, 3, 1}, make_chart({1, 3, 1}, 0, 0));
  auto j = to_json(a);
  CHECK(j["generators"].size() == 2);
  CHECK(j["config"]["d"] == 3);
  CHECK(polynomial_from_json(j["generators"][1]) == a.generators[1]);
}
