#include <algorithm>
#include <set>

#include "doctest.h"
#include "k3deg/canonical.hpp"
#include "k3deg/complex.hpp"
#include "k3deg/complex_io.hpp"
#include "k3deg/error.hpp"
#include "support.hpp"

using namespace k3deg;
using testing::corpus;

namespace {

IntersectionComplex single_nodal(Label a) {
  // One component whose anticanonical cycle is a nodal curve, glued to itself.
  return IntersectionComplex(ComplexMeta{"nodal", {}, {}}, {EdgeRecord{"n", a, -a, true}},
                             {Face{"X", {Dart{0, Side::A}, Dart{0, Side::B}}}});
}

}  // namespace

TEST_CASE("three-component complex with two triple points") {
  const auto c = corpus("fig3.json");
  const auto r = validate(c);
  CHECK(r.ok());
  CHECK(euler_characteristic(c) == 2);
  CHECK(c.vertex_count() == 2);
  CHECK(degree(c) == 2);
  CHECK(r.triple_point_failures() == 0);
  for (const auto& e : c.edges()) CHECK(triple_point_check(e).pass);
  const auto dual = dualize(c);
  CHECK(dual.triangles.size() == 2);
  for (const auto& t : dual.triangles) {
    std::set<std::size_t> faces(t.begin(), t.end());
    CHECK(faces.size() == 3);
  }
}

TEST_CASE("tetrahedron with printed labels") {
  const auto c = corpus("fig7.json");
  CHECK(validate(c).ok());
  CHECK(degree(c) == 4);
  // The outer component carries three (-3)-curves.
  const auto& outer = c.faces()[*c.find_face("X1")];
  for (const auto& d : outer.boundary) CHECK(c.edges()[d.edge].label(d.side) == -3);
}

TEST_CASE("naive tetrahedron fails only the triple point formula") {
  const auto c = corpus("tetrahedron_naive.json");
  const auto r = validate(c);
  CHECK_FALSE(r.ok());
  CHECK(r.sphere());
  CHECK(r.trivalent());
  CHECK(r.triple_point_failures() == 6);
  for (const auto& e : r.edges) {
    CHECK(e.result.expected == -2);
    CHECK(e.result.got == 2);
  }
}

TEST_CASE("triple point check") {
  CHECK(triple_point_check(EdgeRecord{"e", -4, 2, false}).pass);
  CHECK_FALSE(triple_point_check(EdgeRecord{"e", 1, 1, false}).pass);
  CHECK(triple_point_check(EdgeRecord{"e", -3, 3, true}).pass);
  CHECK_FALSE(triple_point_check(EdgeRecord{"e", -1, -1, true}).pass);
  // Swapping the sides never changes the verdict.
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      for (bool nodal : {false, true}) {
        CHECK(triple_point_check(EdgeRecord{"e", a, b, nodal}).pass ==
              triple_point_check(EdgeRecord{"e", b, a, nodal}).pass);
      }
    }
  }
}

TEST_CASE("labels are unbounded") {
  Label big("123456789012345678901234567890");
  const auto c = corpus("fig3.json");
  auto edges = c.edges();
  edges[0].label_a = -big - 2;
  edges[0].label_b = big;
  const auto d = c.with_edges(edges);
  CHECK(validate(d).ok());
  const auto text = write_complex(d);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_complex(text) == d);
}

TEST_CASE("cube complex and its dual octahedron") {
  const auto c = corpus("cube.json");
  CHECK(validate(c).ok());
  CHECK(degree(c) == 8);
  const auto dual = dualize(c);
  CHECK(dual.triangles.size() == 8);
  CHECK(dual.map.faces().size() == 8);
  for (const auto& f : dual.map.faces()) CHECK(f.boundary.size() == 3);
  // The dual of the dual is the cube again.
  CHECK(is_isomorphic(dual_map(dual.map), c));
  CHECK(degree(c) == dual.map.faces().size());
}

TEST_CASE("double dual is the identity on corpus complexes") {
  for (const auto& name : testing::corpus_complexes()) {
    CAPTURE(name);
    const auto c = corpus(name);
    CHECK(is_isomorphic(dual_map(dual_map(c)), c));
  }
}

TEST_CASE("self-glued nodal edge") {
  const auto c = single_nodal(3);
  CHECK(c.self_glued(0));
  const auto r = validate(c);
  CHECK(r.self_glued.size() == 1);
  CHECK(r.warnings.size() == 1);
  // A bigon folded onto itself is a sphere, but its two vertices have one corner each.
  CHECK(r.sphere());
  CHECK(r.non_trivalent.size() == 2);
  const auto strict = validate(c, ValidationOptions{false});
  CHECK(strict.warnings.empty());
  CHECK_FALSE(strict.ok());
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(IntersectionComplex(ComplexMeta{}, {}, {}), StructureError);
  CHECK_THROWS_AS(IntersectionComplex(ComplexMeta{}, {EdgeRecord{"e", -1, -1, false}},
                                      {Face{"X", {Dart{0, Side::A}}}}),
                  StructureError);
  CHECK_THROWS_AS(IntersectionComplex(ComplexMeta{}, {EdgeRecord{"e", -1, -1, false}},
                                      {Face{"X", {Dart{0, Side::A}}}, Face{"Y", {Dart{0, Side::A}}}}),
                  StructureError);
  CHECK_THROWS_AS(IntersectionComplex(ComplexMeta{}, {EdgeRecord{"e", -1, -1, false}, EdgeRecord{"e", -1, -1, false}},
                                      {Face{"X", {Dart{0, Side::A}, Dart{1, Side::A}}},
                                       Face{"Y", {Dart{1, Side::B}, Dart{0, Side::B}}}}),
                  StructureError);
  CHECK_THROWS_AS(IntersectionComplex(ComplexMeta{}, {EdgeRecord{"e", -1, -1, false}}, {Face{"X", {}}}),
                  StructureError);
  CHECK_THROWS_AS(degree(single_nodal(0)), PreconditionError);
}

TEST_CASE("non-trivalent vertex is reported") {
  // Square pillow: two 4-gons glued along four edges, vertices of degree 2.
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < 4; ++i) edges.push_back(EdgeRecord{"e" + std::to_string(i), -1, -1, false});
  Face top{"T", {}};
  Face bottom{"B", {}};
  for (std::size_t i = 0; i < 4; ++i) top.boundary.push_back(Dart{i, Side::A});
  for (std::size_t i = 4; i-- > 0;) bottom.boundary.push_back(Dart{i, Side::B});
  const IntersectionComplex c(ComplexMeta{"pillow", {}, {}}, edges, {top, bottom});
  const auto r = validate(c);
  CHECK(r.sphere());
  CHECK(r.non_trivalent.size() == 4);
  for (const auto& v : r.non_trivalent) CHECK(v.corners == 2);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(degree(c), PreconditionError);
}

TEST_CASE("parsing") {
  SUBCASE("corpus files round-trip byte for byte") {
    for (const auto& name : testing::corpus_complexes()) {
      CAPTURE(name);
      const auto text = testing::read_text(testing::corpus_path(name));
      CHECK(write_complex(parse_complex(text)) == text);
    }
  }
  SUBCASE("syntax error carries a position") {
    try {
      parse_complex("{\n  \"meta\": {\"name\": \"x\"},\n  \"edges\": [,]\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("unknown keys are rejected") {
    auto text = testing::read_text(testing::corpus_path("fig3.json"));
    text.replace(text.find("\"name\""), 6, "\"title\"");
    CHECK_THROWS_AS(parse_complex(text), ParseError);
    auto edge_text = testing::read_text(testing::corpus_path("fig3.json"));
    edge_text.replace(edge_text.find("\"label_b\": 2}"), 13, "\"label_b\": 2, \"colour\": 1}");
    CHECK_THROWS_AS(parse_complex(edge_text), ParseError);
  }
  SUBCASE("bad sides and references") {
    auto text = testing::read_text(testing::corpus_path("fig3.json"));
    auto bad_side = text;
    bad_side.replace(bad_side.find("[\"e0\", \"a\"]"), 11, "[\"e0\", \"c\"]");
    CHECK_THROWS_AS(parse_complex(bad_side), ParseError);
    auto missing = text;
    missing.replace(missing.find("[\"e0\", \"a\"]"), 11, "[\"e9\", \"a\"]");
    CHECK_THROWS(parse_complex(missing));
  }
  SUBCASE("empty complex") {
    CHECK_THROWS_AS(parse_complex("{\"meta\": {\"name\": \"empty\"}, \"edges\": [], \"faces\": []}"),
                    StructureError);
  }
  SUBCASE("non-sphere input can be loaded on request") {
    const std::string torus =
        "{\"meta\": {\"name\": \"torus\"}, \"edges\": [{\"id\": \"x\", \"label_a\": -1, \"label_b\": -1}, "
        "{\"id\": \"y\", \"label_a\": -1, \"label_b\": -1}], "
        "\"faces\": [{\"id\": \"T\", \"boundary\": [[\"x\", \"a\"], [\"y\", \"a\"], [\"x\", \"b\"], [\"y\", \"b\"]]}]}";
    CHECK_THROWS_AS(parse_complex(torus), StructureError);
    const auto c = parse_complex(torus, ParseOptions{false});
    CHECK(euler_characteristic(c) == 0);
    CHECK_FALSE(validate(c).ok());
  }
  SUBCASE("nodal flag round-trips") {
    const IntersectionComplex c(ComplexMeta{"n", {}, {}}, {EdgeRecord{"n", 1, -1, true}},
                                {Face{"X", {Dart{0, Side::A}, Dart{0, Side::B}}}});
    const auto text = write_complex(c);
    CHECK(text.find("\"nodal\": true") != std::string::npos);
    CHECK(parse_complex(text) == c);
  }
  SUBCASE("claimed metadata is carried") {
    const auto c = corpus("cube.json");
    CHECK(c.meta().claimed_degree == 8);
    CHECK_FALSE(c.meta().claimed_index.has_value());
  }
}

TEST_CASE("dot export") {
  const auto tet = export_dot(corpus("fig7.json"));
  for (const char* face : {"\"T_CPQ\";", "\"T_CQR\";", "\"T_CPR\";", "\"X1\";"}) CHECK(tet.find(face) != std::string::npos);
  // Complete graph on four nodes: six edges, each carrying both labels.
  std::size_t edges = 0;
  for (std::size_t pos = tet.find(" -- "); pos != std::string::npos; pos = tet.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 6);
  CHECK(tet.find("taillabel=\"-3\"") != std::string::npos);
  CHECK(tet.find("// vertex 3:") != std::string::npos);

  const auto lens = export_dot(corpus("fig3.json"));
  std::size_t lens_edges = 0;
  for (std::size_t pos = lens.find(" -- "); pos != std::string::npos; pos = lens.find(" -- ", pos + 1)) ++lens_edges;
  CHECK(lens_edges == 3);
  CHECK(lens.find("\"X1\" -- \"X2\" [label=\"e0\", taillabel=\"-4\", headlabel=\"2\"]") != std::string::npos);
}
