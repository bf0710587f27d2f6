#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3deg/label.hpp"

namespace k3deg {

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
std::string_view to_string(Side s) noexcept;

/// A double curve. label_a is its self-intersection inside the face holding
/// the side-a dart, label_b likewise for side b.
struct EdgeRecord {
  std::string id;
  Label label_a;
  Label label_b;
  bool nodal = false;

  const Label& label(Side s) const noexcept { return s == Side::A ? label_a : label_b; }
  Label& label(Side s) noexcept { return s == Side::A ? label_a : label_b; }

  bool operator==(const EdgeRecord&) const = default;
};

/// One side of an edge as it appears on a face boundary. The side-a dart
/// runs from endpoint 0 to endpoint 1 of its edge, the side-b dart back.
struct Dart {
  std::size_t edge = 0;
  Side side = Side::A;

  bool operator==(const Dart&) const = default;
};

/// An irreducible component. The boundary lists its anticanonical cycle as
/// darts in counterclockwise order seen from outside the sphere.
struct Face {
  std::string id;
  std::vector<Dart> boundary;

  bool operator==(const Face&) const = default;
};

struct ComplexMeta {
  std::string name;
  std::optional<std::int64_t> claimed_degree;
  /// Carried as given; not derived from the complex.
  std::optional<std::int64_t> claimed_index;

  bool operator==(const ComplexMeta&) const = default;
};

/// Labeled polygonal cell structure on a closed oriented surface.
///
/// Darts are addressed by a flat index `2 * edge + side`, so the partner of
/// a dart is `d ^ 1`. Vertices are not stored: they are the orbits of
/// `partner(next(d))`, i.e. the corners around each endpoint. The
/// constructor checks referential integrity only; whether the surface is a
/// trivalent sphere is a question for validate().
class IntersectionComplex {
 public:
  IntersectionComplex(ComplexMeta meta, std::vector<EdgeRecord> edges, std::vector<Face> faces);

  const ComplexMeta& meta() const noexcept { return meta_; }
  const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  std::optional<std::size_t> find_edge(std::string_view id) const;
  /// Throws InvalidMove for an unknown id.
  std::size_t edge_index(std::string_view id) const;
  std::optional<std::size_t> find_face(std::string_view id) const;

  std::size_t dart_count() const noexcept { return 2 * edges_.size(); }
  static constexpr std::size_t flat(Dart d) noexcept {
    return 2 * d.edge + static_cast<std::size_t>(d.side);
  }
  static constexpr Dart unflat(std::size_t d) noexcept {
    return Dart{d / 2, static_cast<Side>(d & 1U)};
  }
  static constexpr std::size_t partner(std::size_t d) noexcept { return d ^ 1U; }

  std::size_t next(std::size_t d) const { return next_[d]; }
  std::size_t prev(std::size_t d) const { return prev_[d]; }
  std::size_t face_of(std::size_t d) const { return face_of_[d]; }
  /// Vertex at the end of dart d.
  std::size_t head(std::size_t d) const { return head_[d]; }
  std::size_t tail(std::size_t d) const { return head_[partner(d)]; }
  const Label& dart_label(std::size_t d) const {
    return edges_[d / 2].label(static_cast<Side>(d & 1U));
  }

  std::size_t vertex_count() const noexcept { return corner_counts_.size(); }
  /// Number of face corners at each vertex.
  const std::vector<std::size_t>& corner_counts() const noexcept { return corner_counts_; }
  bool connected() const noexcept { return connected_; }
  bool self_glued(std::size_t edge) const {
    return face_of_[2 * edge] == face_of_[2 * edge + 1];
  }

  IntersectionComplex with_meta(ComplexMeta meta) const;
  IntersectionComplex with_edges(std::vector<EdgeRecord> edges) const;

  bool operator==(const IntersectionComplex& o) const {
    return meta_ == o.meta_ && edges_ == o.edges_ && faces_ == o.faces_;
  }

 private:
  ComplexMeta meta_;
  std::vector<EdgeRecord> edges_;
  std::vector<Face> faces_;

  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> corner_counts_;
  bool connected_ = false;
};

long euler_characteristic(const IntersectionComplex& c);

struct TriplePointResult {
  bool pass = false;
  Label expected;
  Label got;
};

/// label_a + label_b must be 0 for a nodal double curve and -2 otherwise.
TriplePointResult triple_point_check(const EdgeRecord& e);

struct ValidationOptions {
  /// Both sides of one edge on the same face. Allowed with a warning.
  bool allow_self_glued = true;
};

struct EdgeCheck {
  std::string edge;
  TriplePointResult result;
};

struct VertexDefect {
  std::size_t vertex = 0;
  std::size_t corners = 0;
};

struct ValidationReport {
  long euler_characteristic = 0;
  bool connected = false;
  std::size_t vertex_count = 0;
  std::vector<VertexDefect> non_trivalent;
  std::vector<EdgeCheck> edges;
  std::vector<std::string> self_glued;
  bool self_glued_allowed = true;
  std::vector<std::string> warnings;

  bool sphere() const { return connected && euler_characteristic == 2; }
  bool trivalent() const { return non_trivalent.empty(); }
  std::size_t triple_point_failures() const;
  bool ok() const;
};

ValidationReport validate(const IntersectionComplex& c, const ValidationOptions& opts = {});

/// Number of triple points, which is the triangle count of the dual.
/// Throws PreconditionError unless the complex is a trivalent sphere.
std::size_t degree(const IntersectionComplex& c);

/// Same cell structure with every face boundary reversed.
IntersectionComplex mirror(const IntersectionComplex& c);

/// Dual cell structure: one face per vertex of c, one vertex per face of c,
/// same edges. Labels stay attached to their darts, so dual_map(dual_map(c))
/// is c up to renaming. Requires a connected complex.
IntersectionComplex dual_map(const IntersectionComplex& c);

/// The dual triangulation of a valid complex.
struct DualTriangulation {
  IntersectionComplex map;
  /// For each triangle (vertex of the input), the input faces at its corners.
  std::vector<std::array<std::size_t, 3>> triangles;
};

/// Throws PreconditionError unless c is a trivalent sphere.
DualTriangulation dualize(const IntersectionComplex& c);

}  // namespace k3deg
