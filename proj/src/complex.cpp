#include "k3deg/complex.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "k3deg/error.hpp"

namespace k3deg {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string_view to_string(Side s) noexcept { return s == Side::A ? "a" : "b"; }

IntersectionComplex::IntersectionComplex(ComplexMeta meta, std::vector<EdgeRecord> edges,
                                         std::vector<Face> faces)
    : meta_(std::move(meta)), edges_(std::move(edges)), faces_(std::move(faces)) {
  if (faces_.empty()) throw StructureError("complex has no faces");

  {
    std::vector<std::string_view> ids;
    for (const auto& e : edges_) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    if (auto it = std::adjacent_find(ids.begin(), ids.end()); it != ids.end())
      throw StructureError("duplicate edge id " + std::string(*it));
    ids.clear();
    for (const auto& f : faces_) ids.push_back(f.id);
    std::sort(ids.begin(), ids.end());
    if (auto it = std::adjacent_find(ids.begin(), ids.end()); it != ids.end())
      throw StructureError("duplicate face id " + std::string(*it));
  }

  const std::size_t n = dart_count();
  std::vector<std::size_t> refs(edges_.size(), 0);
  for (const auto& f : faces_) {
    if (f.boundary.empty()) throw StructureError("face " + f.id + " has an empty boundary");
    for (const auto& d : f.boundary) {
      if (d.edge >= edges_.size())
        throw StructureError("face " + f.id + " references a missing edge");
      ++refs[d.edge];
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (refs[e] != 2) {
      throw StructureError("edge " + edges_[e].id + " referenced " + std::to_string(refs[e]) +
                           (refs[e] == 1 ? " time" : " times"));
    }
  }

  next_.assign(n, kUnset);
  prev_.assign(n, kUnset);
  face_of_.assign(n, kUnset);
  for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
    const auto& b = faces_[fi].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::size_t d = flat(b[i]);
      if (face_of_[d] != kUnset) {
        throw StructureError("edge " + edges_[b[i].edge].id + " side " +
                             std::string(to_string(b[i].side)) + " referenced twice");
      }
      face_of_[d] = fi;
      next_[d] = flat(b[(i + 1) % b.size()]);
    }
  }
  for (std::size_t d = 0; d < n; ++d) prev_[next_[d]] = d;

  // Vertices: orbits of d -> partner(next(d)); each step crosses one corner.
  head_.assign(n, kUnset);
  for (std::size_t d = 0; d < n; ++d) {
    if (head_[d] != kUnset) continue;
    const std::size_t v = corner_counts_.size();
    std::size_t corners = 0;
    std::size_t x = d;
    do {
      head_[x] = v;
      ++corners;
      x = partner(next_[x]);
    } while (x != d);
    corner_counts_.push_back(corners);
  }

  std::vector<std::size_t> parent(faces_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = faces_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto ra = find_root(parent, face_of_[2 * e]);
    const auto rb = find_root(parent, face_of_[2 * e + 1]);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  connected_ = components == 1;
}

std::optional<std::size_t> IntersectionComplex::find_edge(std::string_view id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

std::size_t IntersectionComplex::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InvalidMove("unknown edge " + std::string(id));
}

std::optional<std::size_t> IntersectionComplex::find_face(std::string_view id) const {
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].id == id) return f;
  return std::nullopt;
}

IntersectionComplex IntersectionComplex::with_meta(ComplexMeta meta) const {
  return IntersectionComplex(std::move(meta), edges_, faces_);
}

IntersectionComplex IntersectionComplex::with_edges(std::vector<EdgeRecord> edges) const {
  return IntersectionComplex(meta_, std::move(edges), faces_);
}

long euler_characteristic(const IntersectionComplex& c) {
  return static_cast<long>(c.vertex_count()) - static_cast<long>(c.edges().size()) +
         static_cast<long>(c.faces().size());
}

TriplePointResult triple_point_check(const EdgeRecord& e) {
  TriplePointResult r;
  r.expected = e.nodal ? Label(0) : Label(-2);
  r.got = e.label_a + e.label_b;
  r.pass = r.got == r.expected;
  return r;
}

std::size_t ValidationReport::triple_point_failures() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const EdgeCheck& c) { return !c.result.pass; }));
}

bool ValidationReport::ok() const {
  return sphere() && trivalent() && triple_point_failures() == 0 &&
         (self_glued_allowed || self_glued.empty());
}

ValidationReport validate(const IntersectionComplex& c, const ValidationOptions& opts) {
  ValidationReport r;
  r.euler_characteristic = euler_characteristic(c);
  r.connected = c.connected();
  r.vertex_count = c.vertex_count();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (c.corner_counts()[v] != 3) r.non_trivalent.push_back({v, c.corner_counts()[v]});
  }
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    r.edges.push_back({c.edges()[e].id, triple_point_check(c.edges()[e])});
    if (c.self_glued(e)) r.self_glued.push_back(c.edges()[e].id);
  }
  r.self_glued_allowed = opts.allow_self_glued;
  if (opts.allow_self_glued) {
    for (const auto& id : r.self_glued)
      r.warnings.push_back("edge " + id + " is glued to its own face");
  }
  return r;
}

std::size_t degree(const IntersectionComplex& c) {
  const auto r = validate(c);
  if (!r.sphere()) throw PreconditionError("degree: complex is not a sphere");
  if (!r.trivalent()) throw PreconditionError("degree: complex has non-trivalent vertices");
  return c.vertex_count();
}

IntersectionComplex mirror(const IntersectionComplex& c) {
  std::vector<Face> faces = c.faces();
  for (auto& f : faces) std::reverse(f.boundary.begin(), f.boundary.end());
  return IntersectionComplex(c.meta(), c.edges(), std::move(faces));
}

IntersectionComplex dual_map(const IntersectionComplex& c) {
  if (!c.connected()) throw PreconditionError("dual_map: complex is not connected");
  std::vector<Face> faces(c.vertex_count());
  std::vector<bool> seen(c.dart_count(), false);
  // Darts are visited in index order, so each boundary starts at its
  // smallest dart.
  for (std::size_t d = 0; d < c.dart_count(); ++d) {
    if (seen[d]) continue;
    auto& f = faces[c.head(d)];
    f.id = "v" + std::to_string(c.head(d));
    std::size_t x = d;
    do {
      seen[x] = true;
      f.boundary.push_back(IntersectionComplex::unflat(x));
      x = IntersectionComplex::partner(c.next(x));
    } while (x != d);
  }
  ComplexMeta meta = c.meta();
  meta.name = c.meta().name.empty() ? "dual" : c.meta().name + "-dual";
  meta.claimed_degree.reset();
  meta.claimed_index.reset();
  return IntersectionComplex(std::move(meta), c.edges(), std::move(faces));
}

DualTriangulation dualize(const IntersectionComplex& c) {
  const auto r = validate(c);
  if (!r.sphere() || !r.trivalent())
    throw PreconditionError("dualize: complex is not a trivalent sphere");
  DualTriangulation out{dual_map(c), {}};
  out.triangles.resize(c.vertex_count());
  // dual_map emits its faces in vertex order.
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    const auto& b = out.map.faces()[v].boundary;
    for (std::size_t i = 0; i < 3; ++i)
      out.triangles[v][i] = c.face_of(IntersectionComplex::flat(b[i]));
  }
  return out;
}

}  // namespace k3deg
