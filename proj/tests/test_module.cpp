#include <doctest.h>

#include <algorithm>

#include "gengroup/groupoid.hpp"
#include "gengroup/module.hpp"
#include "helpers.hpp"

using namespace gengroup;

namespace {

std::shared_ptr<const GeneralizedModule> share(GeneralizedModule m) {
  return std::make_shared<const GeneralizedModule>(std::move(m));
}

}  // namespace

TEST_CASE("rings") {
  const auto z1 = ring_zn(1);
  CHECK(z1.one == z1.zero);
  CHECK(check_ring(z1).passed());
  const auto z2 = ring_zn(2);
  CHECK(z2.add(1, 1) == 0);
  CHECK(z2.mul(1, 1) == 1);
  const auto z6 = ring_zn(6);
  CHECK(z6.mul(2, 3) == 0);
  CHECK(check_ring(z6).passed());
  CHECK_THROWS_AS(ring_zn(0), PreconditionError);
}

TEST_CASE("generalized rings") {
  CHECK(check_generalized_ring(as_generalized_ring(ring_zn(4))).passed());
  CHECK(skew_ring(ring_zn(1)).size() == 1);

  const auto s2 = skew_ring(ring_zn(2));
  CHECK(check_generalized_ring(s2).passed());
  // (1,0) + (0,1) = (1,1); pairs are indexed a*n+b.
  CHECK(s2.add(2, 1) == 3);

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = skew_ring(ring_zn(n));
    CHECK(check_generalized_ring(s).passed());
    const auto rep = classify(s.additive());
    REQUIRE(rep.certificate);
    for (Index x = 0; x < s.size(); ++x) {
      CHECK(rep.certificate->identity[x] == x);
      CHECK(rep.certificate->inverse[x] == x);
    }
  }

  // Componentwise Z2 x Z2 addition with (a,b)(c,d) = (a,d). Lexicographic
  // first failure of x(y+z) = xy+xz is x=(1,0), y=z=(0,0):
  // (1,0)(0,0) = (1,0) but (1,0)+(1,0) = (0,0).
  GeneralizedRing mutant = skew_ring(ring_zn(2));
  for (Index p = 0; p < 4; ++p)
    for (Index q = 0; q < 4; ++q) {
      mutant.add(p, q) = ((p / 2 + q / 2) % 2) * 2 + (p % 2 + q % 2) % 2;
      mutant.mul(p, q) = (p / 2) * 2 + q % 2;
    }
  const auto v = check_generalized_ring(mutant);
  CHECK_FALSE(v.passed());
  const auto* left = v.find("GRING-DISTRIB-LEFT");
  REQUIRE(left);
  CHECK_FALSE(left->passed);
  CHECK(left->witness->elements == std::vector<Index>{2, 0, 0});
}

TEST_CASE("module axioms") {
  CHECK(check_generalized_module(cyclic_module(3, 3)).passed());
  CHECK(is_ordinary(cyclic_module(3, 3)));
  CHECK(check_generalized_module(zero_module(ring_zn(4))).passed());
  CHECK(check_generalized_module(regular_module(ring_zn(6))).passed());
  CHECK(check_generalized_module(cyclic_module(12, 4)).passed());
  CHECK_THROWS_AS(cyclic_module(12, 5), PreconditionError);
}

TEST_CASE("skew pair module") {
  CHECK(skew_pair_module(cyclic_module(1, 1)).module.size() == 1);

  const auto p = skew_pair_module(cyclic_module(3, 3));
  const auto& m = p.module;
  CHECK(check_generalized_module(m).passed());
  CHECK_FALSE(is_ordinary(m));
  CHECK(m.add(p.pair(1, 2), p.pair(0, 1)) == p.pair(1, 0));
  CHECK(m.e(p.pair(1, 2)) == p.pair(1, 0));
  CHECK(m.act(2, p.pair(1, 2)) == p.pair(1, 1));
  CHECK(classify(m.carrier).classification == Classification::NormalGeneralizedGroup);

  const auto p2 = skew_pair_module(cyclic_module(2, 2));
  CHECK(p2.module.neg(p2.pair(0, 1)) == p2.pair(0, 1));

  CHECK_THROWS_AS(skew_pair_module(p.module), PreconditionError);
}

TEST_CASE("skew pair module with the componentwise action fails axiom 4") {
  const auto p = skew_pair_module(cyclic_module(3, 3));
  GeneralizedModule mutant = p.module;
  for (Index r = 0; r < 3; ++r)
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y) mutant.action(r, p.pair(x, y)) = p.pair(r * x % 3, r * y % 3);
  const auto v = check_generalized_module(mutant);
  const auto* ax4 = v.find("MOD-AX4");
  REQUIRE(ax4);
  CHECK_FALSE(ax4->passed);
  // Lexicographic first: r = 0 sends e((1,0)) = (1,0) to (0,0).
  CHECK(ax4->witness->elements == std::vector<Index>{0, p.pair(1, 0)});
  // The r = 2, x = 1 instance: 2(1,0) = (2,0) != (1,0).
  CHECK(mutant.act(2, mutant.e(p.pair(1, 1))) == p.pair(2, 0));
  CHECK(mutant.e(p.pair(1, 1)) == p.pair(1, 0));
}

TEST_CASE("fibers") {
  const auto p1 = skew_pair_module(cyclic_module(1, 1));
  CHECK(fiber_submodule(p1, 0).subset.size() == 1);

  const auto p = skew_pair_module(cyclic_module(3, 3));
  const auto f = fiber_submodule(p, 1);
  CHECK(f.subset.size() == 3);
  CHECK(f.verification.passed());
  CHECK(p.module.add(p.pair(1, 1), p.pair(1, 2)) == p.pair(1, 0));
  // (1,y) -> y is a module isomorphism onto Z3.
  auto fiber = share(f.module);
  auto z3 = share(cyclic_module(3, 3));
  CHECK(check_module_hom(*fiber, *z3, std::vector<Index>{0, 1, 2}).passed());
  CHECK_THROWS_AS(fiber_submodule(p, 3), PreconditionError);
}

TEST_CASE("submodules") {
  const auto p = skew_pair_module(cyclic_module(3, 3));
  std::vector<Index> all(9);
  for (Index i = 0; i < 9; ++i) all[i] = i;
  CHECK(is_submodule(p.module, all));
  const auto e = trivial_submodule(p.module);
  CHECK(e == std::vector<Index>{p.pair(0, 0), p.pair(1, 0), p.pair(2, 0)});
  CHECK(is_submodule(p.module, e));
  CHECK_FALSE(is_submodule(p.module, std::vector<Index>{p.pair(0, 0), p.pair(0, 1)}));
  CHECK_THROWS_AS(is_submodule(p.module, std::vector<Index>{}), PreconditionError);

  CHECK(trivial_submodule(cyclic_module(4, 4)) == std::vector<Index>{0});

  // Skew ring addition over Z1 with the trivial action: x+x = x makes
  // every element its own identity, so e(M) = M.
  const auto s = skew_ring(ring_zn(2));
  Table act(1, 4);
  for (Index x = 0; x < 4; ++x) act(0, x) = x;
  const auto band_module = make_module(ring_zn(1), s.additive(), act);
  CHECK(check_generalized_module(band_module).passed());
  CHECK(trivial_submodule(band_module).size() == 4);
}

TEST_CASE("module homs, kernels and images") {
  const auto p = skew_pair_module(cyclic_module(3, 3));
  auto m = share(p.module);
  const auto homs = enumerate_module_homs(m, m);
  auto find = [&](auto fn) -> const ModuleHom* {
    for (const auto& h : homs) {
      bool same = true;
      for (Index x = 0; x < 3; ++x)
        for (Index y = 0; y < 3; ++y) same = same && h.map[p.pair(x, y)] == fn(x, y);
      if (same) return &h;
    }
    return nullptr;
  };
  const std::vector<Index> ex{p.pair(0, 0), p.pair(1, 0), p.pair(2, 0)};
  std::vector<Index> all(9);
  for (Index i = 0; i < 9; ++i) all[i] = i;

  const auto* id = find([&](Index x, Index y) { return p.pair(x, y); });
  REQUIRE(id);
  CHECK(kernel(*id) == ex);
  CHECK(image(*id) == all);

  const auto* twice = find([&](Index x, Index y) { return p.pair(x, 2 * y % 3); });
  REQUIRE(twice);
  CHECK(kernel(*twice) == ex);
  CHECK(image(*twice) == all);

  const auto* flat = find([&](Index x, Index) { return p.pair(x, 0); });
  REQUIRE(flat);
  CHECK(kernel(*flat) == all);
  CHECK(image(*flat) == ex);

  for (const auto& h : homs) {
    CHECK(is_submodule(*m, kernel(h)));
    CHECK(is_submodule(*m, image(h)));
  }

  CHECK_THROWS_AS(make_module_hom(m, m, std::vector<Index>(9, p.pair(1, 1))), PreconditionError);
  ModuleHom bogus{m, m, std::vector<Index>(9, p.pair(1, 1))};
  CHECK_THROWS_AS(kernel(bogus), PreconditionError);
  CHECK_THROWS_AS(enumerate_module_homs(m, share(cyclic_module(6, 3))), PreconditionError);
  CHECK_THROWS_AS(enumerate_module_homs(m, m, 10), GuardExceeded);
}

TEST_CASE("normality preconditions") {
  Table act(1, 8);
  for (Index x = 0; x < 8; ++x) act(0, x) = x;
  auto rees = share(make_module(ring_zn(1), testing_util::rees_z2(), act));
  CHECK_THROWS_AS(trivial_submodule(*rees), PreconditionError);
  std::vector<Index> id(8);
  for (Index x = 0; x < 8; ++x) id[x] = x;
  CHECK_THROWS_AS(kernel(ModuleHom{rees, rees, id}), PreconditionError);
  CHECK_THROWS_AS(image(ModuleHom{rees, rees, id}), PreconditionError);
}

TEST_CASE("cyclic modules") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = cyclic_promote(cyclic_module(n, n));
    REQUIRE(c);
    CHECK(c->abelian_group);
  }
  CHECK(cyclic_promote(cyclic_module(3, 3))->generator == 1);
  CHECK_FALSE(cyclic_promote(skew_pair_module(cyclic_module(3, 3)).module));
  CHECK_FALSE(cyclic_promote(product_module(cyclic_module(2, 2), cyclic_module(2, 2))));
}

TEST_CASE("products") {
  const auto z3 = cyclic_module(3, 3);
  const auto with_zero = product_module(z3, zero_module(z3.ring));
  CHECK(with_zero.carrier.table == z3.carrier.table);
  CHECK(with_zero.action == z3.action);

  const auto s2 = skew_pair_module(cyclic_module(2, 2)).module;
  const auto pp = product_module(s2, s2);
  CHECK(pp.size() == 16);
  CHECK(check_generalized_module(pp).passed());
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK(pp.e(i * 4 + j) == s2.e(i) * 4 + s2.e(j));
  CHECK_THROWS_AS(product_module(z3, cyclic_module(6, 3)), PreconditionError);
}
