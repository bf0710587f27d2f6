#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3deg/complex.hpp"

namespace k3deg {

/// Ordered as the search tie-break expects.
enum class MoveKind : std::uint8_t { TypeI, TypeIInverse, TypeII, BlowUp };

/// "I", "I_inv", "II", "blowup".
std::string_view to_string(MoveKind k) noexcept;
std::optional<MoveKind> move_kind_from_string(std::string_view s) noexcept;

struct Move {
  MoveKind kind = MoveKind::TypeI;
  std::string edge;
  /// BlowUp only.
  Side side = Side::A;
  std::int64_t count = 1;

  bool operator==(const Move&) const = default;
};

std::string describe(const Move& m);

/// (a, b) -> (a - 1, b + 1), or (a + 1, b - 1) when inverse.
/// Throws InvalidMove for an unknown or nodal edge.
IntersectionComplex apply_type1(const IntersectionComplex& c, std::string_view edge, bool inverse);

/// Why a Type II flip of `edge` is illegal, or nullopt when it is legal.
std::optional<std::string> type2_obstruction(const IntersectionComplex& c, std::size_t edge);

/// Flips a (-1,-1) edge: the dual edge between the two adjacent faces is
/// replaced by the other diagonal of the surrounding quadrilateral. The new
/// edge keeps the id and the labels (-1,-1). Throws InvalidMove.
IntersectionComplex apply_type2(const IntersectionComplex& c, std::string_view edge);

/// Blows up `count` points of the double curve inside the face on `side`,
/// lowering that side's label by count.
IntersectionComplex blow_up_edge_side(const IntersectionComplex& c, std::string_view edge,
                                      Side side, std::int64_t count);

IntersectionComplex apply_move(const IntersectionComplex& c, const Move& m);

/// Every Type I, Type I inverse and legal Type II move, ordered by kind and
/// then by the edge order of the canonical traversal.
/// Throws PreconditionError unless validate(c) passes.
std::vector<Move> enumerate_moves(const IntersectionComplex& c);

struct MoveSet {
  bool type1 = true;
  bool type2 = true;
};

/// Parses "I", "II", "I,II".
MoveSet parse_move_set(std::string_view s);

struct SearchOptions {
  std::size_t max_depth = 8;
  MoveSet moves;
  /// Stop expanding once this many distinct complexes have been seen.
  std::size_t max_states = 2'000'000;
};

struct SearchResult {
  bool found = false;
  std::vector<Move> path;
  std::size_t visited = 0;
  /// The state cap was hit before the depth bound.
  bool truncated = false;
};

/// Breadth-first search over isomorphism classes from src to dst. A found
/// path is shortest and deterministic, and has been replayed before it is
/// returned. Throws PreconditionError if either input fails validation and
/// DegreeMismatch if the degrees differ.
SearchResult search_path(const IntersectionComplex& src, const IntersectionComplex& dst,
                         const SearchOptions& opts);

/// JSON array of {"kind", "edge", "side"?, "count"?}.
std::vector<Move> parse_move_script(std::string_view text);
std::string write_move_script(const std::vector<Move>& moves);

}  // namespace k3deg
