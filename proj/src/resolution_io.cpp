#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "k3deg/error.hpp"
#include "k3deg/lattice.hpp"

namespace k3deg::lattice {

namespace {

using nlohmann::json;

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<std::int64_t>();
}

Point2 as_point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where + " must be [x, y]");
  return {as_int(v[0], where + "[0]"), as_int(v[1], where + "[1]")};
}

}  // namespace

ResolutionData parse_resolution(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("resolution file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("resolution file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "group" && key != "points" && key != "triangles")
      throw ParseError("unknown key \"" + key + "\" in resolution file");
  }
  if (!doc.contains("group") || !doc["group"].is_array())
    throw ParseError("resolution file needs a \"group\" array");

  ResolutionData out;
  for (std::size_t i = 0; i < doc["group"].size(); ++i) {
    const auto& g = doc["group"][i];
    const std::string where = "group[" + std::to_string(i) + "]";
    if (!g.is_array() || g.size() != 2 || !g[1].is_array() || g[1].size() != 3)
      throw ParseError(where + " must be [r, [w1, w2, w3]]");
    QuotientGenerator gen;
    gen.order = as_int(g[0], where + ".r");
    for (std::size_t k = 0; k < 3; ++k) gen.weights[k] = as_int(g[1][k], where + ".w");
    out.group.generators.push_back(gen);
  }

  JuniorSimplex simplex = junior_points(out.group);
  if (doc.contains("points")) {
    const auto& jp = doc["points"];
    if (!jp.is_array()) throw ParseError("points must be an array");
    std::vector<Point2> given;
    std::set<Point2> distinct;
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const Point2 p = as_point(jp[i], "points[" + std::to_string(i) + "]");
      if (!simplex.contains(p)) throw ParseError("point " + to_string(p) + " is not a junior point");
      if (!distinct.insert(p).second) throw ParseError("point " + to_string(p) + " listed twice");
      given.push_back(p);
    }
    if (given.size() != simplex.points.size()) {
      throw ParseError("points lists " + std::to_string(given.size()) + " of " +
                       std::to_string(simplex.points.size()) + " junior points");
    }
    simplex.points = std::move(given);
  }

  if (doc.contains("triangles")) {
    const auto& jt = doc["triangles"];
    if (!jt.is_array()) throw ParseError("triangles must be an array");
    out.triangulation.simplex = simplex;
    for (std::size_t i = 0; i < jt.size(); ++i) {
      const std::string where = "triangles[" + std::to_string(i) + "]";
      if (!jt[i].is_array() || jt[i].size() != 3) throw ParseError(where + " must be [i, j, k]");
      std::array<std::size_t, 3> tri{};
      for (std::size_t k = 0; k < 3; ++k) {
        const std::int64_t idx = as_int(jt[i][k], where);
        if (idx < 0 || static_cast<std::size_t>(idx) >= simplex.points.size())
          throw ParseError(where + " index " + std::to_string(idx) + " out of range");
        tri[k] = static_cast<std::size_t>(idx);
      }
      out.triangulation.triangles.push_back(tri);
    }
    out.triangles_given = true;
  } else {
    out.triangulation = pulling_triangulation(simplex);
  }
  return out;
}

ResolutionData load_resolution(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_resolution(ss.str());
}

}  // namespace k3deg::lattice
