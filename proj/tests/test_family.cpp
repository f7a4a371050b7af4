#include "doctest.h"
#include "support.hpp"
#include "wpoly/family.hpp"

using namespace wpoly;
using P = LaurentPoly;

TEST_CASE("state sums") {
  const DRingElem d(P::d());
  auto s = state_sums(two_marked_vertices());
  CHECK(s.s1 == DRingElem::d_power(4));
  CHECK(s.s2.is_zero());

  s = state_sums(shifted_base());
  CHECK(s.s1 == DRingElem(P::A(6), 5));
  CHECK(s.s2.is_zero());

  ColoredGraph one = two_marked_vertices();
  one.edges = {{0, 1, Color::Chain, 1}};
  s = state_sums(one);
  CHECK(s.s1 == DRingElem(P::A(-1), 4));
  CHECK(s.s2 == DRingElem(P::A(1), 3));
  // the two states partition the plain subset sum
  CHECK((s.s1 + s.s2).times_dpow(-3) == w_subset(one, bracket_weights(one)));
  CHECK_THROWS_AS(state_sums(empty_graph(2)), GraphError);
}

TEST_CASE("state sums partition the subset sum") {
  for (const auto& name : builtin_family_names()) {
    const Family f = builtin_family(name);
    for (int n = 0; n <= 2; ++n) {
      const auto g = glue_n(f.base, f.tangle, n);
      const auto s = state_sums(g);
      CHECK((s.s1 + s.s2).times_dpow(-g.vcount - 1) == w_subset(g, bracket_weights(g)));
    }
  }
}

TEST_CASE("tangle coefficients of single edges") {
  ColoredGraph sheaf = two_marked_vertices();
  sheaf.edges = {{0, 1, Color::Sheaf, 2}};
  auto a = tangle_coeffs(sheaf);
  const auto w = twist_class_weights(Color::Sheaf, 2);
  CHECK(a.a11 == w.y);
  CHECK(a.a11 == DRingElem(P::A(-2)));
  CHECK(a.a12 == w.x.times_dpow(-1));
  CHECK(a.a21.is_zero());
  for (int n = -4; n <= 5; ++n) {
    if (n == 0) continue;
    ColoredGraph chain = two_marked_vertices();
    chain.edges = {{0, 1, Color::Chain, n}};
    a = tangle_coeffs(chain);
    const auto wc = twist_class_weights(Color::Chain, n);
    CHECK(a.a11 == wc.y);
    CHECK(a.a12 == wc.x.times_dpow(-1));
  }
}

TEST_CASE("transfer relations hold for every built-in tangle") {
  for (const auto& name : builtin_family_names()) {
    const auto a = tangle_coeffs(builtin_family(name).tangle);
    CHECK(a.a21.is_zero());
    CHECK(a.a22 == a.a11 + a.a12.times_dpow(2));
  }
}

TEST_CASE("delta observations") {
  for (const auto& name : builtin_family_names()) {
    const Family f = builtin_family(name);
    bool table_mismatch = false;
    for (const auto& o : delta_table_check(glue(f.base, f.tangle), f.tangle)) {
      CHECK(o.matches_rule);
      // joining cannot be undone by adding edges
      CHECK_FALSE((o.t_state == 2 && o.result_state == 1));
      if (!o.matches_table) {
        table_mismatch = true;
        CHECK(o.t_state == 2);
        CHECK(o.w_state == 1);
      }
    }
    CHECK(table_mismatch);
  }
}

TEST_CASE("twist family closed form") {
  const Family f = builtin_family("twist");
  const FamilyForm form = family_closed_form(f.base, f.tangle);
  CHECK(testing::equal_up_to_unit(form.lambda1, P::A(-2)));
  CHECK(testing::equal_up_to_unit(form.lambda2, P::A(6)));
  CHECK(form.lambda2 * P::A(-2) == form.lambda1 * P::A(6));
  CHECK(testing::equal_up_to_unit(form.coeff1, P::parse("A^4 + 1 + A^-4")));
  CHECK(form.unit_rule == form.analytic_rule);
  CHECK(family_bracket(form, 1) == P::parse("-A^4 - A^-4"));
  for (int n = 1; n <= 5; ++n)
    CHECK(family_bracket(form, n) == direct_family_bracket(f.base, f.tangle, n));
}

TEST_CASE("pretzel family closed form") {
  const Family f = builtin_family("pretzel:3,3");
  CHECK(f.default_n == 3);
  const FamilyForm form = family_closed_form(f.base, f.tangle);
  CHECK(testing::equal_up_to_unit(form.lambda1, twist_class_weights(Color::Chain, 3).y.num()));
  CHECK(testing::equal_up_to_unit(form.coeff1, P::parse("A^4 + 1 + A^-4")));
  CHECK(family_bracket(form, 3) == direct_family_bracket(f.base, f.tangle, 3));
}

TEST_CASE("closed forms match direct brackets") {
  for (const auto& name : builtin_family_names()) {
    const Family f = builtin_family(name);
    const FamilyForm form = family_closed_form(f.base, f.tangle);
    CHECK(form.unit_rule == form.analytic_rule);
    for (int n = 1; n <= 4; ++n)
      CHECK(family_bracket(form, n) == direct_family_bracket(f.base, f.tangle, n));
  }
}

TEST_CASE("matrix power closed form") {
  const DRingElem x(P::parse("A^2 - 1")), y(P::parse("A^-3"), -1);
  CHECK(matrix_power_check(x, y, 1));
  CHECK(matrix_power_check(x, y, 2));
  const auto a = tangle_coeffs(builtin_family("2-1").tangle);
  CHECK(matrix_power_check(a.a11, a.a12, 5));
}

TEST_CASE("built-in names") {
  CHECK_THROWS(builtin_family("nope"));
  CHECK_THROWS(builtin_family("pretzel:0"));
  CHECK_THROWS(builtin_family("pretzel:2,x"));
  CHECK(builtin_family("pretzel:4").default_n == 0);
}

TEST_CASE("data files match the built-in families") {
  const std::string dir = WPOLY_DATA_DIR;
  CHECK(load_graph(dir + "/base_two_marked.json") == two_marked_vertices());
  CHECK(load_graph(dir + "/base_shifted.json") == shifted_base());
  for (const char* name : {"2-1", "2-2", "3-2", "3-3", "2-2-2", "3-2-2"})
    CHECK(load_graph(dir + "/tangle_" + name + ".json") == builtin_family(name).tangle);
  CHECK(load_graph(dir + "/tangle_sheaf_2.json") == builtin_family("twist").tangle);
  CHECK(load_graph(dir + "/tangle_chain_3.json") == builtin_family("pretzel:3,3").tangle);
}
