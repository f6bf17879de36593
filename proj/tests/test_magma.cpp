#include <doctest.h>

#include "gengroup/magma.hpp"
#include "helpers.hpp"

using namespace gengroup;
using testing_util::magma_of;

TEST_CASE("associativity") {
  CHECK(check_associativity(cyclic_group(2)).associative);
  CHECK(check_associativity(magma_of({{0, 0}, {1, 1}})).associative);

  // 0*0 = 1, everything else 0. (0,0,0) agrees on both sides; (0,0,1)
  // gives (00)1 = 11 = 0 against 0(01) = 00 = 1.
  const auto bad = magma_of({{1, 0}, {0, 0}});
  const auto r = check_associativity(bad);
  CHECK_FALSE(r.associative);
  REQUIRE(r.violation);
  CHECK(*r.violation == std::array<Index, 3>{0, 0, 1});
  const auto rep = classify(bad);
  CHECK(rep.classification == Classification::NotAssociative);
  REQUIRE(rep.witness);
  CHECK(rep.witness->check == "ASSOC");
  CHECK(rep.witness->elements == std::vector<Index>{0, 0, 1});
}

TEST_CASE("classify ladder") {
  const auto z2 = classify(cyclic_group(2));
  CHECK(z2.classification == Classification::Group);
  REQUIRE(z2.certificate);
  CHECK(z2.certificate->identity == std::vector<Index>{0, 0});
  CHECK(z2.abelian);

  const auto band = rect_band(2, 2);
  const auto rb = classify(band);
  CHECK(rb.classification == Classification::NormalGeneralizedGroup);
  REQUIRE(rb.certificate);
  for (Index x = 0; x < 4; ++x) {
    CHECK(rb.certificate->identity[x] == x);
    CHECK(rb.certificate->inverse[x] == x);
  }

  const auto left_zero = magma_of({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  CHECK(classify(left_zero).classification == Classification::NormalGeneralizedGroup);
  CHECK(left_zero.table == rect_band(3, 1).table);

  // Constant 1: associative, but nothing fixes 0.
  const auto constant = classify(magma_of({{1, 1}, {1, 1}}));
  CHECK(constant.classification == Classification::SemigroupOnly);
  REQUIRE(constant.witness);
  CHECK(constant.witness->check == "GG-AX2-EXISTS");
  CHECK(constant.witness->elements == std::vector<Index>{0});

  // No associative table of order <= 4 has unique local identities but
  // lacks an inverse, so the inverse laws are exercised on certificates.
  const auto z3 = cyclic_group(3);
  auto cert = *classify(z3).certificate;
  CHECK(certificate_holds(z3, cert));
  cert.inverse[1] = 1;
  CHECK_FALSE(certificate_holds(z3, cert));
}

TEST_CASE("two local identities are rejected with both named") {
  // Min semilattice: both 0 and 1 fix 0 on each side.
  const auto m = magma_of({{0, 0}, {0, 1}});
  const auto rep = classify(m);
  CHECK(rep.classification == Classification::SemigroupOnly);
  REQUIRE(rep.witness);
  CHECK(rep.witness->check == "GG-AX2-UNIQUE");
  CHECK(rep.witness->elements == std::vector<Index>{0, 0, 1});
}

TEST_CASE("a generalized group that is not normal") {
  const auto m = testing_util::rees_z2();
  const auto rep = classify(m);
  CHECK(rep.classification == Classification::GeneralizedGroup);
  REQUIRE(rep.certificate);
  const auto* normal = rep.checks.find("NORMAL-E-MULT");
  REQUIRE(normal);
  CHECK_FALSE(normal->passed);
  CHECK(normal->kind == CheckKind::Property);
  CHECK(rep.checks.passed());
  const auto oracle_gg = oracle::generalized_group(testing_util::grid_of(m));
  REQUIRE(oracle_gg);
  CHECK(oracle::level(testing_util::grid_of(m)) == 2);
}

TEST_CASE("generalized subgroups") {
  const auto z4 = cyclic_group(4);
  CHECK(is_generalized_subgroup(z4, std::vector<Index>{0, 2}));
  CHECK_FALSE(is_generalized_subgroup(z4, std::vector<Index>{0, 1}));
  CHECK(is_generalized_subgroup(rect_band(2, 2), std::vector<Index>{0}));
  CHECK_THROWS_AS(is_generalized_subgroup(z4, std::vector<Index>{}), PreconditionError);
  CHECK_THROWS_AS(is_generalized_subgroup(magma_of({{0, 0}, {0, 0}}), std::vector<Index>{0}), PreconditionError);
}

TEST_CASE("rect_band") {
  CHECK(classify(rect_band(1, 1)).classification == Classification::Group);
  const auto b22 = rect_band(2, 2);
  const Index e01 = *b22.find("(0,1)"), e10 = *b22.find("(1,0)"), e00 = *b22.find("(0,0)");
  CHECK(b22.op(e01, e10) == e00);
  const auto b23 = rect_band(2, 3);
  CHECK(b23.size() == 6);
  CHECK(classify(b23).classification == Classification::NormalGeneralizedGroup);
  for (Index x = 0; x < 6; ++x) CHECK(b23.op(x, x) == x);
  CHECK_THROWS_AS(rect_band(0, 2), PreconditionError);
}

TEST_CASE("complete digraph") {
  CHECK(classify(complete_digraph_gg(1)).classification == Classification::Group);
  const auto d2 = complete_digraph_gg(2);
  CHECK(d2.op(*d2.find("(0,1)"), *d2.find("(1,0)")) == *d2.find("(0,0)"));
  const auto rep = classify(complete_digraph_gg(3));
  CHECK(at_least(rep.classification, Classification::GeneralizedGroup));
  for (Index f = 0; f < 9; ++f) {
    CHECK(rep.certificate->identity[f] == f);
    CHECK(rep.certificate->inverse[f] == f);
  }
  for (std::size_t n = 1; n <= 5; ++n) CHECK(complete_digraph_gg(n).table == rect_band(n, n).table);
  CHECK_THROWS_AS(complete_digraph_gg(0), PreconditionError);
}

TEST_CASE("census") {
  const auto c1 = enumerate_generalized_groups(1);
  CHECK(c1.structures.size() == 1);
  const auto c2 = enumerate_generalized_groups(2);
  auto has = [&](const oracle::Grid& g) {
    const auto m = magma_of(g);
    for (const auto& s : c2.structures)
      if (s.table == m.table) return true;
    return false;
  };
  CHECK(has({{0, 1}, {1, 0}}));  // Z2, identity 0
  CHECK(has({{1, 0}, {0, 1}}));  // Z2, identity 1
  CHECK(has({{0, 0}, {1, 1}}));  // left zero
  CHECK(has({{0, 1}, {0, 1}}));  // right zero
  CHECK(c2.structures.size() == 4);
  for (const auto& s : enumerate_generalized_groups(3).structures) {
    const auto rep = classify(s);
    CHECK(at_least(rep.classification, Classification::GeneralizedGroup));
    if (rep.abelian) CHECK(rep.classification == Classification::Group);
  }
  CHECK_THROWS_AS(enumerate_generalized_groups(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_generalized_groups(5), PreconditionError);
}

TEST_CASE("homomorphisms") {
  const auto z2 = cyclic_group(2);
  const auto self = enumerate_homs(z2, z2);
  REQUIRE(self.size() == 2);
  CHECK(self[0].map == std::vector<Index>{0, 0});
  CHECK(self[1].map == std::vector<Index>{0, 1});

  const auto b21 = rect_band(2, 1), b22 = rect_band(2, 2);
  const auto cb = classify(b21).certificate, cd = classify(b22).certificate;
  const auto band_homs = enumerate_homs(b21, b22);
  CHECK_FALSE(band_homs.empty());
  for (const auto& h : band_homs)
    for (Index a = 0; a < b21.size(); ++a) {
      CHECK(h.map[cb->identity[a]] == cd->identity[h.map[a]]);
      CHECK(h.map[cb->inverse[a]] == cd->inverse[h.map[a]]);
    }

  const auto consts = enumerate_homs(z2, b22);
  REQUIRE(consts.size() == 4);
  for (const auto& h : consts) CHECK(h.map[0] == h.map[1]);

  CHECK_THROWS_AS(enumerate_homs(cyclic_group(8), cyclic_group(8)), GuardExceeded);
}

TEST_CASE("symmetric generalized groups are groups") {
  for (const auto& s : enumerate_generalized_groups(3).structures) {
    bool symmetric = true;
    for (Index a = 0; a < 3; ++a)
      for (Index b = 0; b < 3; ++b) symmetric = symmetric && s.op(a, b) == s.op(b, a);
    if (symmetric) CHECK(classify(s).classification == Classification::Group);
  }
}
