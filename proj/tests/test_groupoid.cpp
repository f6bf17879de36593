#include <doctest.h>

#include "gengroup/groupoid.hpp"
#include "helpers.hpp"

using namespace gengroup;

namespace {

FiniteGroupoid two_object_z2() { return pair_groupoid_with_group(2, cyclic_group(2)); }

}  // namespace

TEST_CASE("check_groupoid") {
  CHECK(check_groupoid(pair_groupoid(1)).passed());
  CHECK(check_groupoid(one_object_groupoid(cyclic_group(1))).passed());

  const auto p2 = pair_groupoid(2);
  CHECK(check_groupoid(p2).passed());
  CHECK(p2.morphism_count() == 4);
  const Index f01 = *p2.find_morphism("(0,1)");
  CHECK(p2.compose(f01, *p2.find_morphism("(1,0)")) == p2.find_morphism("(0,0)"));
  CHECK_FALSE(p2.compose(f01, f01));
  CHECK_THROWS_AS(p2.compose_checked(f01, f01), std::domain_error);

  const auto p3 = pair_groupoid(3);
  CHECK(p3.morphism_count() == 9);
  CHECK(p3.thin());

  CHECK(check_groupoid(two_object_z2()).passed());
  CHECK_FALSE(two_object_z2().thin());
}

TEST_CASE("broken groupoids give witnesses") {
  auto g = pair_groupoid(2);
  const Index f01 = *g.find_morphism("(0,1)");
  g.inverse[f01] = f01;
  const auto v = check_groupoid(g);
  CHECK_FALSE(v.passed());
  const auto w = v.first_witness();
  REQUIRE(w);
  CHECK(w->check == "GPD-INVERSE");
  CHECK(w->elements == std::vector<Index>{f01});

  auto h = pair_groupoid(2);
  h.comp(f01, f01) = f01;
  CHECK(v.find("GPD-COMP-DOMAIN")->passed);
  CHECK(check_groupoid(h).first_witness()->check == "GPD-COMP-DOMAIN");

  auto k = pair_groupoid(2);
  k.comp(*k.find_morphism("(0,1)"), *k.find_morphism("(1,0)")) = *k.find_morphism("(0,1)");
  CHECK(check_groupoid(k).first_witness()->check == "GPD-COMP-TYPE");
}

TEST_CASE("unit inference") {
  const auto g = two_object_z2();
  const auto inferred = infer_units(g.objects, g.morphisms, g.comp);
  REQUIRE(inferred.identity);
  CHECK(*inferred.identity == g.identity);
  CHECK(*inferred.inverse == g.inverse);

  PartialTable empty(1);
  const auto none = infer_units({"*"}, {{"f", 0, 0}}, empty);
  CHECK(none.failure);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(one_object_groupoid(cyclic_group(3))));
  CHECK(is_connected(pair_groupoid(4)));
  const auto u = disjoint_union(one_object_groupoid(cyclic_group(1)), one_object_groupoid(cyclic_group(1)));
  CHECK(check_groupoid(u).passed());
  CHECK_FALSE(is_connected(u));
  CHECK_THROWS_AS(choose_transversal(u, TransversalPolicy::lexicographic()), PreconditionError);
}

TEST_CASE("transversals") {
  const auto one = one_object_groupoid(cyclic_group(3));
  CHECK(choose_transversal(one, TransversalPolicy::lexicographic())(0, 0) == one.identity[0]);

  const auto p3 = pair_groupoid(3);
  const auto t = choose_transversal(p3, TransversalPolicy::seeded(9));
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) CHECK(t(a, b) == a * 3 + b);

  const auto g = two_object_z2();
  CHECK(choose_transversal(g, TransversalPolicy::lexicographic()) ==
        choose_transversal(g, TransversalPolicy::lexicographic()));
  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto ts = choose_transversal(g, TransversalPolicy::seeded(s));
    CHECK(ts == choose_transversal(g, TransversalPolicy::seeded(s)));
    CHECK_NOTHROW(validate_transversal(g, ts));
  }
  CHECK(TransversalPolicy::seeded(4).describe() == "seed:4");
  CHECK(TransversalPolicy::lexicographic().describe() == "lex");

  auto bad = choose_transversal(g, TransversalPolicy::lexicographic());
  bad.h[0 * 2 + 1] = g.identity[0];
  CHECK_THROWS_AS(validate_transversal(g, bad), PreconditionError);
}

TEST_CASE("gstar") {
  const auto z3 = cyclic_group(3);
  const auto one = one_object_groupoid(z3);
  const auto s1 = gstar(one, choose_transversal(one, TransversalPolicy::lexicographic()));
  CHECK(s1.magma.table == z3.table);

  const auto p2 = pair_groupoid(2);
  const auto s2 = gstar(p2, choose_transversal(p2, TransversalPolicy::lexicographic()));
  const Index f01 = *p2.find_morphism("(0,1)");
  CHECK(s2.magma.op(f01, f01) == f01);
  CHECK(s2.formula.identity[f01] == f01);
  CHECK(s2.formula.inverse[f01] == f01);

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = pair_groupoid(n);
    const auto s = gstar(p, choose_transversal(p, TransversalPolicy::lexicographic()));
    CHECK(s.magma.table == rect_band(n, n).table);
    CHECK(classify(s.magma).classification >= Classification::NormalGeneralizedGroup);
  }

  const auto g = two_object_z2();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto t = choose_transversal(g, TransversalPolicy::seeded(seed));
    const auto s = gstar(g, t);
    const auto rep = classify(s.magma);
    REQUIRE(rep.certificate);
    CHECK(*rep.certificate == s.formula);
    for (Index f = 0; f < g.morphism_count(); ++f) {
      const Index h = t(g.morphism(f).dom, g.morphism(f).cod);
      CHECK(s.magma.op(f, h) == f);
      CHECK(s.magma.op(h, f) == f);
      CHECK(s.magma.op(f, s.formula.inverse[f]) == h);
    }
  }

  auto broken = pair_groupoid(2);
  broken.inverse[f01] = f01;
  CHECK_THROWS_AS(gstar(broken, choose_transversal(pair_groupoid(2), TransversalPolicy::lexicographic())),
                  PreconditionError);
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(pair_groupoid(0), PreconditionError);
  CHECK_THROWS_AS(one_object_groupoid(rect_band(2, 2)), PreconditionError);
}
