#include "k3deg/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "k3deg/error.hpp"

namespace k3deg::lattice {

namespace {

using Vec3 = std::array<std::int64_t, 3>;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void check_generators(const QuotientData& q) {
  for (const auto& g : q.generators) {
    if (g.order <= 0)
      throw PreconditionError("degenerate generator: order " + std::to_string(g.order));
    if (mod(g.weights[0] + g.weights[1] + g.weights[2], g.order) != 0) {
      throw PreconditionError("generator 1/" + std::to_string(g.order) +
                              " does not act in SL(3): weights must sum to 0 mod the order");
    }
  }
}

std::int64_t common_denominator(const QuotientData& q) {
  std::int64_t l = 1;
  for (const auto& g : q.generators) l = std::lcm(l, g.order);
  return l;
}

// Group elements as integer triples mod the common denominator.
std::set<Vec3> group_elements(const QuotientData& q, std::int64_t denom) {
  std::vector<Vec3> gens;
  for (const auto& g : q.generators) {
    const std::int64_t s = denom / g.order;
    gens.push_back({mod(g.weights[0] * s, denom), mod(g.weights[1] * s, denom),
                    mod(g.weights[2] * s, denom)});
  }
  std::set<Vec3> seen{{0, 0, 0}};
  std::vector<Vec3> todo{{0, 0, 0}};
  while (!todo.empty()) {
    const Vec3 x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Vec3 y{mod(x[0] + g[0], denom), mod(x[1] + g[1], denom), mod(x[2] + g[2], denom)};
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

// Row-style Hermite normal form of the lattice spanned by `rows`:
// basis (h11, h12), (0, h22) with h11, h22 > 0 and 0 <= h12 < h22.
LevelBasis hermite_basis(const std::vector<Point2>& rows, std::int64_t denom) {
  std::int64_t a = 0, b = 0, g2 = 0;
  for (auto [x, y] : rows) {
    while (x != 0) {
      const std::int64_t t = a / x;
      a -= t * x;
      b -= t * y;
      std::swap(a, x);
      std::swap(b, y);
    }
    g2 = std::gcd(g2, y);
  }
  if (a < 0) {
    a = -a;
    b = -b;
  }
  LevelBasis basis;
  basis.denominator = denom;
  basis.h11 = a;
  basis.h22 = std::abs(g2);
  basis.h12 = mod(b, basis.h22);
  return basis;
}

Point2 to_level_coords(const LevelBasis& basis, std::int64_t x1, std::int64_t x2) {
  const std::int64_t X = x1 / basis.h11;
  const std::int64_t Y = (x2 - X * basis.h12) / basis.h22;
  return {X, Y};
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

Point2 primitive(Point2 v) {
  const std::int64_t g = std::gcd(v.x, v.y);
  return g == 0 ? v : Point2{v.x / g, v.y / g};
}

// Angular order counterclockwise from the positive x-axis.
bool angle_less(const Point2& a, const Point2& b) {
  auto half = [](const Point2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

std::int64_t area2(const std::vector<Point2>& pts, const std::array<std::size_t, 3>& t) {
  return cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]);
}

bool separated_by_edges(const std::vector<Point2>& pts, const std::array<std::size_t, 3>& s,
                        const std::array<std::size_t, 3>& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    const Point2& p = pts[s[i]];
    const Point2 dir = pts[s[(i + 1) % 3]] - p;
    const int own = sign(cross(dir, pts[s[(i + 2) % 3]] - p));
    bool separates = true;
    for (std::size_t k : t) {
      if (own * sign(cross(dir, pts[k] - p)) > 0) {
        separates = false;
        break;
      }
    }
    if (separates) return true;
  }
  return false;
}

bool interiors_overlap(const std::vector<Point2>& pts, const std::array<std::size_t, 3>& s,
                       const std::array<std::size_t, 3>& t) {
  return !separated_by_edges(pts, s, t) && !separated_by_edges(pts, t, s);
}

}  // namespace

std::string to_string(const Point2& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::size_t JuniorSimplex::index_of(const Point2& p) const {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end()) throw PreconditionError(to_string(p) + " is not a junior point");
  return static_cast<std::size_t>(it - points.begin());
}

bool JuniorSimplex::contains(const Point2& p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

std::int64_t group_order(const QuotientData& q) {
  for (const auto& g : q.generators) {
    if (g.order <= 0)
      throw PreconditionError("degenerate generator: order " + std::to_string(g.order));
  }
  return static_cast<std::int64_t>(group_elements(q, common_denominator(q)).size());
}

JuniorSimplex junior_points(const QuotientData& q) {
  check_generators(q);
  const std::int64_t denom = common_denominator(q);
  const auto elements = group_elements(q, denom);

  std::vector<Point2> rows{{denom, 0}, {0, denom}};
  for (const auto& g : q.generators) {
    const std::int64_t s = denom / g.order;
    rows.push_back({g.weights[0] * s, g.weights[1] * s});
  }

  JuniorSimplex j;
  j.basis = hermite_basis(rows, denom);
  j.group_order = static_cast<std::int64_t>(elements.size());
  j.corners = {to_level_coords(j.basis, denom, 0), to_level_coords(j.basis, 0, denom),
               Point2{0, 0}};
  j.points.assign(j.corners.begin(), j.corners.end());
  for (const auto& g : elements) {
    if (g[0] + g[1] + g[2] == denom) j.points.push_back(to_level_coords(j.basis, g[0], g[1]));
  }
  std::sort(j.points.begin(), j.points.end());
  return j;
}

int locate(const JuniorSimplex& j, const Point2& p) {
  const auto& c = j.corners;
  const int orient = sign(cross(c[1] - c[0], c[2] - c[0]));
  bool boundary = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const int s = orient * sign(cross(c[(i + 1) % 3] - c[i], p - c[i]));
    if (s < 0) return -1;
    if (s == 0) boundary = true;
  }
  return boundary ? 0 : 1;
}

std::vector<Point2> interior_points(const JuniorSimplex& j) {
  std::vector<Point2> out;
  for (const auto& p : j.points)
    if (locate(j, p) == 1) out.push_back(p);
  return out;
}

TriangulationReport validate_triangulation(const Triangulation2D& t) {
  const auto& pts = t.simplex.points;
  for (const auto& tri : t.triangles) {
    for (std::size_t k : tri) {
      if (k >= pts.size())
        throw PreconditionError("triangle index " + std::to_string(k) + " out of range");
    }
  }
  TriangulationReport r;
  r.triangle_count = t.triangles.size();
  r.group_order = t.simplex.group_order;
  const auto& c = t.simplex.corners;
  r.expected_area = std::abs(cross(c[1] - c[0], c[2] - c[0]));
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const std::int64_t a = std::abs(area2(pts, t.triangles[i]));
    r.total_area += a;
    if (a != 1) r.non_unimodular.push_back(i);
    if (std::any_of(t.triangles[i].begin(), t.triangles[i].end(),
                    [&](std::size_t k) { return locate(t.simplex, pts[k]) < 0; }))
      r.outside.push_back(i);
  }
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    if (area2(pts, t.triangles[i]) == 0) continue;
    for (std::size_t k = i + 1; k < t.triangles.size(); ++k) {
      if (area2(pts, t.triangles[k]) == 0) continue;
      if (interiors_overlap(pts, t.triangles[i], t.triangles[k])) r.overlapping.emplace_back(i, k);
    }
  }
  return r;
}

Triangulation2D pulling_triangulation(const JuniorSimplex& j) {
  const auto& pts = j.points;
  auto ccw = [&](std::array<std::size_t, 3> t) {
    if (area2(pts, t) < 0) std::swap(t[1], t[2]);
    return t;
  };
  Triangulation2D out{j, {}};
  out.triangles.push_back(ccw({j.index_of(j.corners[0]), j.index_of(j.corners[1]),
                               j.index_of(j.corners[2])}));

  // j.points is sorted, so this pulls in lexicographic order.
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (std::find(j.corners.begin(), j.corners.end(), pts[p]) != j.corners.end()) continue;
    std::vector<std::array<std::size_t, 3>> refined;
    for (const auto& t : out.triangles) {
      std::array<std::int64_t, 3> side{};
      for (std::size_t i = 0; i < 3; ++i)
        side[i] = cross(pts[t[(i + 1) % 3]] - pts[t[i]], pts[p] - pts[t[i]]);
      if (std::any_of(side.begin(), side.end(), [](std::int64_t s) { return s < 0; })) {
        refined.push_back(t);
        continue;
      }
      // Cone from p over every edge of t that does not contain p.
      for (std::size_t i = 0; i < 3; ++i) {
        if (side[i] > 0) refined.push_back({p, t[i], t[(i + 1) % 3]});
      }
    }
    out.triangles = std::move(refined);
  }
  for (auto& t : out.triangles) t = ccw(t);
  return out;
}

Fan2D star_fan(const Triangulation2D& t, const Point2& p) {
  const auto& pts = t.simplex.points;
  if (!t.simplex.contains(p) || locate(t.simplex, p) != 1)
    throw PreconditionError(to_string(p) + " is not an interior junior point");
  const std::size_t pi = t.simplex.index_of(p);

  std::map<std::size_t, std::size_t> link;  // counterclockwise successor
  for (auto tri : t.triangles) {
    auto it = std::find(tri.begin(), tri.end(), pi);
    if (it == tri.end()) continue;
    std::rotate(tri.begin(), it, tri.end());
    if (area2(pts, tri) < 0) std::swap(tri[1], tri[2]);
    if (!link.emplace(tri[1], tri[2]).second)
      throw PreconditionError("triangles around " + to_string(p) + " overlap");
  }
  if (link.empty()) throw PreconditionError(to_string(p) + " is not a vertex of the triangulation");

  std::size_t start = link.begin()->first;
  for (const auto& [u, _] : link) {
    if (angle_less(pts[u] - p, pts[start] - p)) start = u;
  }
  Fan2D fan;
  std::size_t cur = start;
  do {
    fan.rays.push_back(primitive(pts[cur] - p));
    auto it = link.find(cur);
    if (it == link.end() || fan.rays.size() > link.size())
      throw PreconditionError("star of " + to_string(p) + " is not a closed cycle");
    cur = it->second;
  } while (cur != start);
  if (fan.rays.size() != link.size())
    throw PreconditionError("star of " + to_string(p) + " is not a single cycle");
  return fan;
}

std::vector<std::int64_t> toric_self_intersections(const Fan2D& f) {
  const auto& v = f.rays;
  const std::size_t n = v.size();
  if (n < 3) throw PreconditionError("fan with fewer than 3 rays is not complete");
  int orient = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = cross(v[i], v[(i + 1) % n]);
    if (d != 1 && d != -1)
      throw PreconditionError("cone " + std::to_string(i) + " is not unimodular (det " +
                              std::to_string(d) + ")");
    if (orient == 0) orient = static_cast<int>(d);
    if (d != orient) throw PreconditionError("rays are not cyclically ordered");
  }
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    if (orient > 0 ? !angle_less(a, b) : !angle_less(b, a)) ++wraps;
  }
  if (wraps != 1) throw PreconditionError("fan winds " + std::to_string(wraps) + " times");

  std::vector<std::int64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& before = v[(i + n - 1) % n];
    const Point2& after = v[(i + 1) % n];
    a[i] = -orient * cross(before, after);
    const Point2 sum = before + after;
    if (sum.x + a[i] * v[i].x != 0 || sum.y + a[i] * v[i].y != 0)
      throw std::logic_error("toric_self_intersections: relation does not close");
  }
  return a;
}

std::int64_t toric_degree(const Fan2D& f) {
  toric_self_intersections(f);
  return 12 - static_cast<std::int64_t>(f.rays.size());
}

std::vector<Point2> fan_canonical_form(const Fan2D& f) {
  const auto& v = f.rays;
  const std::size_t n = v.size();
  std::vector<Point2> best;
  for (std::size_t i = 0; i < n; ++i) {
    for (int dir : {1, -1}) {
      auto at = [&](std::size_t k) {
        const auto len = static_cast<std::int64_t>(n);
        return v[static_cast<std::size_t>(
            mod(static_cast<std::int64_t>(i) + dir * static_cast<std::int64_t>(k), len))];
      };
      const Point2 s0 = at(0);
      const Point2 s1 = at(1);
      const std::int64_t det = cross(s0, s1);
      if (det != 1 && det != -1) continue;
      std::vector<Point2> image(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Point2 w = at(k);
        image[k] = {cross(w, s1) / det, cross(s0, w) / det};
      }
      if (best.empty() || image < best) best = std::move(image);
    }
  }
  if (best.empty()) throw PreconditionError("fan has no unimodular cone");
  return best;
}

bool fans_isomorphic(const Fan2D& a, const Fan2D& b) {
  return a.rays.size() == b.rays.size() && fan_canonical_form(a) == fan_canonical_form(b);
}

std::pair<std::int64_t, std::int64_t> double_curve_labels(const Triangulation2D& t, const Point2& p,
                                                         const Point2& q) {
  const std::size_t pi = t.simplex.index_of(p);
  const std::size_t qi = t.simplex.index_of(q);
  const bool adjacent = std::any_of(t.triangles.begin(), t.triangles.end(), [&](const auto& tri) {
    return std::find(tri.begin(), tri.end(), pi) != tri.end() &&
           std::find(tri.begin(), tri.end(), qi) != tri.end();
  });
  if (pi == qi || !adjacent)
    throw PreconditionError(to_string(p) + " and " + to_string(q) + " are not adjacent");

  auto label_in_star = [&](const Point2& from, const Point2& to) {
    const Fan2D fan = star_fan(t, from);
    const auto a = toric_self_intersections(fan);
    const Point2 ray = primitive(to - from);
    const auto it = std::find(fan.rays.begin(), fan.rays.end(), ray);
    return a[static_cast<std::size_t>(it - fan.rays.begin())];
  };
  return {label_in_star(p, q), label_in_star(q, p)};
}

}  // namespace k3deg::lattice
