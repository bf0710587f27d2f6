#include <algorithm>

#include "doctest.h"
#include "k3deg/canonical.hpp"
#include "k3deg/error.hpp"
#include "k3deg/modifications.hpp"
#include "support.hpp"

using namespace k3deg;
using testing::corpus;

namespace {

Label abs_label(const Label& x) { return x < 0 ? Label(-x) : x; }

// Type I moves only shift labels along an edge, so the fewest moves from a
// to b is the best label-distance over all unlabeled map isomorphisms.
Label type1_distance(const IntersectionComplex& a, const IntersectionComplex& b) {
  std::optional<Label> best;
  for (const auto& phi : testing::map_isomorphisms(a, b)) {
    Label dist = 0;
    bool reachable = true;
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
      const std::size_t d = 2 * e;
      const auto& ea = a.edges()[e];
      const auto& eb = b.edges()[phi[d] / 2];
      if (ea.label_a + ea.label_b != eb.label_a + eb.label_b || ea.nodal != eb.nodal) reachable = false;
      dist += abs_label(a.dart_label(d) - b.dart_label(phi[d]));
    }
    if (reachable && (!best || dist < *best)) best = dist;
  }
  return best.value_or(-1);
}

}  // namespace

TEST_CASE("Type I arithmetic") {
  const auto c = corpus("fig3.json");
  const auto d = apply_type1(c, "e0", false);
  CHECK(d.edges()[0].label_a == -5);
  CHECK(d.edges()[0].label_b == 3);
  CHECK(d.edges()[1] == c.edges()[1]);
  CHECK(d.edges()[2] == c.edges()[2]);
  const auto m = apply_type1(c, "e1", false);
  CHECK(m.edges()[1].label_a == -2);
  CHECK(m.edges()[1].label_b == 0);
  for (const auto& e : c.edges()) CHECK(apply_type1(apply_type1(c, e.id, false), e.id, true) == c);
  CHECK_THROWS_AS(apply_type1(c, "nope", false), InvalidMove);
}

TEST_CASE("Type I on a nodal edge is rejected") {
  const IntersectionComplex c(ComplexMeta{}, {EdgeRecord{"n", 1, -1, true}},
                              {Face{"X", {Dart{0, Side::A}, Dart{0, Side::B}}}});
  CHECK_THROWS_AS(apply_type1(c, "n", false), InvalidMove);
  CHECK(type2_obstruction(c, 0).has_value());
}

TEST_CASE("Type II preconditions") {
  const auto c = corpus("fig3.json");
  auto why = type2_obstruction(c, 1);
  REQUIRE(why.has_value());
  CHECK(why->find("degenerate flip") != std::string::npos);
  CHECK_THROWS_AS(apply_type2(c, "e1"), InvalidMove);
  why = type2_obstruction(c, 0);
  REQUIRE(why.has_value());
  CHECK(why->find("(-1, -1)") != std::string::npos);
  CHECK_THROWS_AS(apply_type2(c, "e0"), InvalidMove);
}

TEST_CASE("Type II on the cube") {
  const auto cube = corpus("cube.json");
  for (const auto& e : cube.edges()) {
    CAPTURE(e.id);
    const auto flipped = apply_type2(cube, e.id);
    CHECK(validate(flipped).ok());
    CHECK(degree(flipped) == 8);
    for (const auto& f : flipped.edges()) {
      CHECK(f.label_a == -1);
      CHECK(f.label_b == -1);
    }
    // Flip oracle: the two squares along e become triangles, the two
    // squares meeting e only at its ends become pentagons.
    const std::size_t idx = cube.edge_index(e.id);
    const std::size_t fa = cube.face_of(2 * idx);
    const std::size_t fb = cube.face_of(2 * idx + 1);
    std::vector<std::size_t> ends;
    for (std::size_t f = 0; f < 6; ++f) {
      if (f == fa || f == fb) continue;
      // Opposite square shares no vertex with e; the two that remain touch it.
      bool touches = false;
      for (const auto& d : cube.faces()[f].boundary) {
        const std::size_t x = IntersectionComplex::flat(d);
        for (std::size_t y : {2 * idx, 2 * idx + 1})
          touches = touches || cube.head(x) == cube.head(y) || cube.tail(x) == cube.head(y);
      }
      if (touches) ends.push_back(f);
    }
    REQUIRE(ends.size() == 2);
    std::vector<std::size_t> sizes;
    for (std::size_t f = 0; f < 6; ++f) {
      const auto n = flipped.faces()[f].boundary.size();
      if (f == fa || f == fb)
        CHECK(n == 3);
      else if (f == ends[0] || f == ends[1])
        CHECK(n == 5);
      else
        CHECK(n == 4);
    }
    // Flipping back returns the cube up to isomorphism.
    CHECK(is_isomorphic(apply_type2(flipped, e.id), cube));
    CHECK_FALSE(is_isomorphic(flipped, cube));
  }
}

TEST_CASE("blow-ups on a side") {
  const IntersectionComplex c(ComplexMeta{}, {EdgeRecord{"e", 0, -2, false}},
                              {Face{"X", {Dart{0, Side::A}}}, Face{"Y", {Dart{0, Side::B}}}});
  const auto d = blow_up_edge_side(c, "e", Side::A, 1);
  CHECK(d.edges()[0].label_a == -1);
  CHECK(d.edges()[0].label_b == -2);
  CHECK_THROWS_AS(blow_up_edge_side(c, "e", Side::A, 0), InvalidMove);
  CHECK_THROWS_AS(blow_up_edge_side(c, "f", Side::A, 1), InvalidMove);

  // Four points per double curve fix every edge of the naive tetrahedron.
  auto t = corpus("tetrahedron_naive.json");
  for (const auto& e : t.edges()) {
    const Label needed = e.label_a + e.label_b + 2;
    CHECK(needed == 4);
  }
  for (const auto& m : parse_move_script(testing::read_text(testing::corpus_path("tetrahedron_blowups.json"))))
    t = apply_move(t, m);
  CHECK(validate(t).ok());
  CHECK(degree(t) == 4);
  for (const auto& e : t.edges()) {
    CHECK(e.label_a == -1);
    CHECK(e.label_b == -1);
  }
}

TEST_CASE("move enumeration") {
  const auto fig3 = enumerate_moves(corpus("fig3.json"));
  CHECK(fig3.size() == 6);
  CHECK(std::none_of(fig3.begin(), fig3.end(), [](const Move& m) { return m.kind == MoveKind::TypeII; }));
  const auto cube = enumerate_moves(corpus("cube.json"));
  CHECK(std::count_if(cube.begin(), cube.end(), [](const Move& m) { return m.kind != MoveKind::TypeII; }) == 24);
  CHECK(std::count_if(cube.begin(), cube.end(), [](const Move& m) { return m.kind == MoveKind::TypeII; }) == 12);
  // Kinds come in order I, I_inv, II.
  CHECK(std::is_sorted(cube.begin(), cube.end(),
                       [](const Move& a, const Move& b) { return a.kind < b.kind; }));
  CHECK_THROWS_AS(enumerate_moves(corpus("tetrahedron_naive.json")), PreconditionError);
}

TEST_CASE("search") {
  const auto fig3 = corpus("fig3.json");
  const auto fig9 = corpus("fig9.json");

  SUBCASE("fig9 to fig3 by Type I moves") {
    SearchOptions opts;
    opts.max_depth = 12;
    opts.moves = parse_move_set("I");
    const auto r = search_path(fig9, fig3, opts);
    REQUIRE(r.found);
    CHECK(Label(r.path.size()) == type1_distance(fig9, fig3));
    CHECK(r.path.size() == 9);
    auto replay = fig9;
    for (const auto& m : r.path) replay = apply_move(replay, m);
    CHECK(is_isomorphic(replay, fig3));
    // Deterministic.
    const auto again = search_path(fig9, fig3, opts);
    REQUIRE(again.path.size() == r.path.size());
    for (std::size_t i = 0; i < r.path.size(); ++i) {
      CHECK(again.path[i].kind == r.path[i].kind);
      CHECK(again.path[i].edge == r.path[i].edge);
    }
  }
  SUBCASE("depth bound") {
    SearchOptions opts;
    opts.max_depth = 8;
    opts.moves = parse_move_set("I");
    const auto r = search_path(fig9, fig3, opts);
    CHECK_FALSE(r.found);
    CHECK_FALSE(r.truncated);
  }
  SUBCASE("state cap") {
    SearchOptions opts;
    opts.max_depth = 12;
    opts.max_states = 50;
    opts.moves = parse_move_set("I");
    const auto r = search_path(fig9, fig3, opts);
    CHECK_FALSE(r.found);
    CHECK(r.truncated);
  }
  SUBCASE("identity") {
    const auto r = search_path(fig3, fig3, SearchOptions{});
    CHECK(r.found);
    CHECK(r.path.empty());
  }
  SUBCASE("degree mismatch") {
    CHECK_THROWS_AS(search_path(fig3, corpus("fig7.json"), SearchOptions{}), DegreeMismatch);
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(search_path(corpus("tetrahedron_naive.json"), corpus("fig7.json"), SearchOptions{}),
                    PreconditionError);
  }
  SUBCASE("cube flip is one Type II move away") {
    const auto cube = corpus("cube.json");
    SearchOptions opts;
    opts.max_depth = 2;
    opts.moves = parse_move_set("II");
    const auto r = search_path(cube, apply_type2(cube, "e5"), opts);
    REQUIRE(r.found);
    CHECK(r.path.size() == 1);
    CHECK(r.path[0].kind == MoveKind::TypeII);
  }
  SUBCASE("random Type I targets match the distance oracle") {
    std::mt19937 rng(3);
    const auto tet = corpus("fig7.json");
    for (int trial = 0; trial < 10; ++trial) {
      auto target = tet;
      const int steps = static_cast<int>(rng() % 4) + 1;
      for (int s = 0; s < steps; ++s) {
        const auto& e = target.edges()[rng() % target.edges().size()];
        target = apply_type1(target, e.id, rng() % 2 == 1);
      }
      SearchOptions opts;
      opts.max_depth = 4;
      opts.moves = parse_move_set("I");
      const auto r = search_path(tet, target, opts);
      REQUIRE(r.found);
      CHECK(Label(r.path.size()) == type1_distance(tet, target));
    }
  }
}

TEST_CASE("move scripts") {
  const auto moves = parse_move_script(
      R"([{"kind": "I", "edge": "e0"}, {"kind": "blowup", "edge": "e1", "side": "b", "count": 3},
          {"kind": "II", "edge": "x"}, {"kind": "I_inv", "edge": "y"}])");
  REQUIRE(moves.size() == 4);
  CHECK(moves[1].kind == MoveKind::BlowUp);
  CHECK(moves[1].side == Side::B);
  CHECK(moves[1].count == 3);
  CHECK(moves[3].kind == MoveKind::TypeIInverse);
  const auto again = parse_move_script(write_move_script(moves));
  REQUIRE(again.size() == moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) CHECK(describe(again[i]) == describe(moves[i]));

  CHECK_THROWS_AS(parse_move_script(R"({"kind": "I"})"), ParseError);
  CHECK_THROWS_AS(parse_move_script(R"([{"kind": "III", "edge": "e"}])"), ParseError);
  CHECK_THROWS_AS(parse_move_script(R"([{"kind": "blowup", "edge": "e"}])"), ParseError);
  CHECK_THROWS_AS(parse_move_script(R"([{"kind": "I", "edge": "e", "side": "a"}])"), ParseError);
  CHECK_THROWS_AS(parse_move_script(R"([{"kind": "I", "edge": "e", "why": 1}])"), ParseError);
  CHECK_THROWS_AS(parse_move_script(R"([{"kind": "blowup", "edge": "e", "side": "a", "count": 0}])"), ParseError);
  CHECK_THROWS_AS(parse_move_set("I,III"), ParseError);
}
