#include <doctest.h>

#include "gengroup/structure_file.hpp"
#include "helpers.hpp"

using namespace gengroup;

TEST_CASE("minimal magma") {
  const auto f = parse_structure("kind magma\nelements 0\ntable mul\n0\n");
  const auto m = to_magma(f);
  CHECK(m.size() == 1);
  CHECK(classify(m).classification == Classification::Group);
}

TEST_CASE("comments and blank lines") {
  const auto f = parse_structure(
      "# two-element left zero band\n"
      "kind magma   # trailing comment\n"
      "\n"
      "elements a b\n"
      "table mul\n"
      "a a\n"
      "# between rows\n"
      "b b\n");
  const auto m = to_magma(f);
  CHECK(m.table == rect_band(2, 1).table);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      (void)to_magma(parse_structure(text));
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("kind magma\nelements 0 1\ntable mul\n0 1\n1 0 1\n") == 5);
  CHECK(line_of("kind magma\nelements 0 1\ntable mul\n0 1\n1 2\n") == 5);
  CHECK(line_of("kind lattice\n") == 1);
  CHECK(line_of("elements 0\n") == 1);
  CHECK(line_of("kind magma\nkind magma\n") == 2);
  CHECK(line_of("kind magma\n0 1\n") == 2);
  CHECK(line_of("kind magma\nelements 0 0\ntable mul\n0 0\n0 0\n") == 2);
  CHECK_THROWS_AS(to_magma(parse_structure("kind magma\nelements 0 1\ntable mul\n0 1\n")), ParseError);
  CHECK_THROWS_AS(to_groupoid(parse_structure("kind magma\nelements 0\ntable mul\n0\n")), ParseError);
}

TEST_CASE("round trips") {
  const auto band = rect_band(2, 2);
  const auto text = serialize(from_magma(band));
  CHECK(to_magma(parse_structure(text)) == band);
  CHECK(parse_structure(text) == from_magma(band));

  const auto g = pair_groupoid_with_group(2, cyclic_group(2));
  CHECK(to_groupoid(parse_structure(serialize(from_groupoid(g)))) == g);

  const auto r = ring_zn(4);
  CHECK(to_ring(parse_structure(serialize(from_ring(r)))) == r);

  const auto sr = skew_ring(ring_zn(2));
  CHECK(to_generalized_ring(parse_structure(serialize(from_generalized_ring(sr)))) == sr);

  const auto m = skew_pair_module(cyclic_module(3, 3)).module;
  const auto mm = to_module(parse_structure(serialize(from_module(m, "x.ring"))), m.ring);
  CHECK(mm.carrier == m.carrier);
  CHECK(mm.action == m.action);
  CHECK(mm.cert == m.cert);

  const auto gg = pair_gg_groupoid(rect_band(2, 2));
  CHECK(to_gg_groupoid(parse_structure(serialize(from_gg_groupoid(gg, "x.groupoid"))), gg.groupoid) == gg);

  const auto gm = pair_gm_groupoid(cyclic_module(3, 3));
  CHECK(to_gm_groupoid(parse_structure(serialize(from_gm_groupoid(gm, "a", "b"))), gm.gg.groupoid, gm.ring) == gm);
}

TEST_CASE("groupoid units are inferred and validated") {
  const std::string base =
      "kind groupoid\n"
      "objects x y\n"
      "morphism 1x x x\n"
      "morphism f x y\n"
      "morphism g y x\n"
      "morphism 1y y y\n"
      "table comp\n"
      "1x f - -\n"
      "- - 1x f\n"
      "g 1y - -\n"
      "- - g 1y\n";
  const auto g = to_groupoid(parse_structure(base));
  CHECK(check_groupoid(g).passed());
  CHECK(g.identity == std::vector<Index>{0, 3});
  CHECK(g.inverse == std::vector<Index>{0, 2, 1, 3});

  // f o g = f breaks the identity at x, so nothing can be inferred.
  std::string broken = base;
  broken.replace(broken.find("- - 1x f"), 8, "- - f f ");
  CHECK_THROWS_AS(to_groupoid(parse_structure(broken)), StructureError);

  CHECK_THROWS_AS(to_groupoid(parse_structure(base + "identity x 1x\n")), ParseError);
}

TEST_CASE("save and load follow references") {
  const auto dir = testing_util::scratch_dir("structure_file");
  const auto gm = pair_gm_groupoid(cyclic_module(2, 2));
  const auto written = save_structure(dir / "p.gm", gm);
  CHECK(written.size() == 3);
  const auto loaded = load_structure(dir / "p.gm");
  REQUIRE(std::holds_alternative<GMGroupoid>(loaded));
  CHECK(std::get<GMGroupoid>(loaded) == gm);

  const auto m = skew_pair_module(cyclic_module(2, 2)).module;
  save_structure(dir / "s.module", m);
  CHECK(std::filesystem::exists(dir / "s.ring"));
  const auto lm = std::get<GeneralizedModule>(load_structure(dir / "s.module"));
  CHECK(lm.carrier == m.carrier);

  CHECK_THROWS_AS(load_structure(dir / "missing.magma"), ParseError);
}
