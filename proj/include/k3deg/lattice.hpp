#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3deg::lattice {

/// The diagonal action 1/order (w1, w2, w3) on A^3.
struct QuotientGenerator {
  std::int64_t order = 1;
  std::array<std::int64_t, 3> weights{};
};

struct QuotientData {
  std::vector<QuotientGenerator> generators;
};

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Point2&) const = default;
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
};

std::string to_string(const Point2& p);

inline std::int64_t cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

/// Hermite normal form basis of the level-1 slice, in units of 1/denominator
/// on the first two coordinates: a point (x1, x2, x3) with x1+x2+x3 = 1 maps
/// to X = d*x1 / h11, Y = (d*x2 - X*h12) / h22. The third corner e3 sits at
/// the origin.
struct LevelBasis {
  std::int64_t denominator = 1;
  std::int64_t h11 = 1;
  std::int64_t h12 = 0;
  std::int64_t h22 = 1;
};

struct JuniorSimplex {
  LevelBasis basis;
  std::int64_t group_order = 1;
  /// Images of e1, e2, e3.
  std::array<Point2, 3> corners{};
  std::vector<Point2> points;

  std::size_t index_of(const Point2& p) const;  // throws if absent
  bool contains(const Point2& p) const;
};

/// Order of the group generated by the actions. Throws on order <= 0.
std::int64_t group_order(const QuotientData& q);

/// Lattice points of the overlattice on the junior triangle, sorted by
/// (x, y). Throws PreconditionError for a non-positive order or a generator
/// outside SL(3) (weights not summing to 0 mod order).
JuniorSimplex junior_points(const QuotientData& q);

std::vector<Point2> interior_points(const JuniorSimplex& j);

/// Which side of the junior triangle p lies on: 1 strictly inside, 0 on the
/// boundary, -1 outside.
int locate(const JuniorSimplex& j, const Point2& p);

struct Triangulation2D {
  JuniorSimplex simplex;
  std::vector<std::array<std::size_t, 3>> triangles;
};

struct TriangulationReport {
  std::size_t triangle_count = 0;
  std::int64_t group_order = 0;
  /// Sum of normalized areas versus the normalized area of the junior triangle.
  std::int64_t total_area = 0;
  std::int64_t expected_area = 0;
  std::vector<std::size_t> non_unimodular;
  std::vector<std::size_t> outside;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping;

  bool unimodular() const { return non_unimodular.empty(); }
  bool covers() const { return outside.empty() && overlapping.empty() && total_area == expected_area; }
  bool ok() const { return unimodular() && covers() && triangle_count == static_cast<std::size_t>(group_order); }
};

/// Throws PreconditionError when a triangle index is out of range.
TriangulationReport validate_triangulation(const Triangulation2D& t);

/// Unimodular triangulation on all junior points: the points are pulled in
/// lexicographic order, each one subdividing the triangles containing it.
Triangulation2D pulling_triangulation(const JuniorSimplex& j);

/// Cyclically ordered primitive rays, counterclockwise.
struct Fan2D {
  std::vector<Point2> rays;

  bool operator==(const Fan2D&) const = default;
};

/// Rays from interior point p to its link, counterclockwise starting at the
/// smallest angle measured from the positive x-axis.
Fan2D star_fan(const Triangulation2D& t, const Point2& p);

/// a_i with v_{i-1} + v_{i+1} + a_i v_i = 0. Throws PreconditionError for a
/// non-unimodular cone or a fan that does not wind exactly once.
std::vector<std::int64_t> toric_self_intersections(const Fan2D& f);

/// K^2 = 12 - n of the smooth complete toric surface.
std::int64_t toric_degree(const Fan2D& f);

/// Representative of the GL(2,Z) orbit of f, so equal results mean
/// isomorphic toric surfaces.
std::vector<Point2> fan_canonical_form(const Fan2D& f);
bool fans_isomorphic(const Fan2D& a, const Fan2D& b);

/// Self-intersections of the curve between the compact divisors of p and q,
/// first as seen in p's star, then in q's.
std::pair<std::int64_t, std::int64_t> double_curve_labels(const Triangulation2D& t, const Point2& p,
                                                         const Point2& q);

/// Resolution file:
///   {"group": [[r, [w1, w2, w3]], ...], "points": [[x, y], ...]?,
///    "triangles": [[i, j, k], ...]?}
/// Missing points are computed; missing triangles come from
/// pulling_triangulation.
struct ResolutionData {
  QuotientData group;
  Triangulation2D triangulation;
  bool triangles_given = false;
};

ResolutionData parse_resolution(std::string_view text);
ResolutionData load_resolution(const std::string& path);

}  // namespace k3deg::lattice
