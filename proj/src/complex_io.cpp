#include "k3deg/complex_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

#include "k3deg/error.hpp"

namespace k3deg {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

std::int64_t require_int(const json& v, const std::string& where) {
  if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<std::int64_t>();
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v.get<std::uint64_t>());
  throw ParseError(where + " must be an integer");
}

Label parse_label(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Label(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Label(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError(where + " is not a decimal integer");
    return Label(s);
  }
  throw ParseError(where + " must be an integer");
}

std::string format_label(const Label& v) {
  static const Label kMin(std::numeric_limits<std::int64_t>::min());
  static const Label kMax(std::numeric_limits<std::int64_t>::max());
  if (v >= kMin && v <= kMax) return v.str();
  return "\"" + v.str() + "\"";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

IntersectionComplex parse_complex(std::string_view text, const ParseOptions& opts) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw ParseError("syntax error", line, col);
  }
  check_keys(doc, {"meta", "edges", "faces"}, "complex");

  ComplexMeta meta;
  const auto& m = require(doc, "meta", "complex");
  check_keys(m, {"name", "claimed_degree", "claimed_index"}, "meta");
  meta.name = require_string(require(m, "name", "meta"), "meta.name");
  if (m.contains("claimed_degree"))
    meta.claimed_degree = require_int(m["claimed_degree"], "meta.claimed_degree");
  if (m.contains("claimed_index"))
    meta.claimed_index = require_int(m["claimed_index"], "meta.claimed_index");

  const auto& je = require(doc, "edges", "complex");
  if (!je.is_array()) throw ParseError("edges must be an array");
  std::vector<EdgeRecord> edges;
  std::map<std::string, std::size_t> edge_ids;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    check_keys(je[i], {"id", "label_a", "label_b", "nodal"}, where);
    EdgeRecord e;
    e.id = require_string(require(je[i], "id", where), where + ".id");
    e.label_a = parse_label(require(je[i], "label_a", where), where + ".label_a");
    e.label_b = parse_label(require(je[i], "label_b", where), where + ".label_b");
    if (je[i].contains("nodal")) {
      if (!je[i]["nodal"].is_boolean()) throw ParseError(where + ".nodal must be a boolean");
      e.nodal = je[i]["nodal"].get<bool>();
    }
    if (!edge_ids.emplace(e.id, edges.size()).second)
      throw ParseError("duplicate edge id " + e.id);
    edges.push_back(std::move(e));
  }

  const auto& jf = require(doc, "faces", "complex");
  if (!jf.is_array()) throw ParseError("faces must be an array");
  std::vector<Face> faces;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string where = "faces[" + std::to_string(i) + "]";
    check_keys(jf[i], {"id", "boundary"}, where);
    Face f;
    f.id = require_string(require(jf[i], "id", where), where + ".id");
    const auto& b = require(jf[i], "boundary", where);
    if (!b.is_array()) throw ParseError(where + ".boundary must be an array");
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::string dw = where + ".boundary[" + std::to_string(k) + "]";
      if (!b[k].is_array() || b[k].size() != 2 || !b[k][0].is_string() || !b[k][1].is_string())
        throw ParseError(dw + " must be [edge-id, \"a\"|\"b\"]");
      const auto id = b[k][0].get<std::string>();
      const auto side = b[k][1].get<std::string>();
      auto it = edge_ids.find(id);
      if (it == edge_ids.end()) throw ParseError(dw + " references unknown edge " + id);
      if (side != "a" && side != "b") throw ParseError(dw + " has side \"" + side + "\"");
      f.boundary.push_back(Dart{it->second, side == "a" ? Side::A : Side::B});
    }
    faces.push_back(std::move(f));
  }

  IntersectionComplex c(std::move(meta), std::move(edges), std::move(faces));
  if (opts.require_sphere) {
    if (!c.connected()) throw StructureError("surface is disconnected");
    if (euler_characteristic(c) != 2)
      throw StructureError("surface is not a sphere (Euler characteristic " +
                           std::to_string(euler_characteristic(c)) + ")");
  }
  return c;
}

IntersectionComplex load_complex(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str(), opts);
}

std::string write_complex(const IntersectionComplex& c) {
  std::ostringstream out;
  out << "{\n  \"meta\": {\"name\": " << quoted(c.meta().name);
  if (c.meta().claimed_degree) out << ", \"claimed_degree\": " << *c.meta().claimed_degree;
  if (c.meta().claimed_index) out << ", \"claimed_index\": " << *c.meta().claimed_index;
  out << "},\n  \"edges\": [\n";
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    const auto& e = c.edges()[i];
    out << "    {\"id\": " << quoted(e.id) << ", \"label_a\": " << format_label(e.label_a)
        << ", \"label_b\": " << format_label(e.label_b);
    if (e.nodal) out << ", \"nodal\": true";
    out << "}" << (i + 1 < c.edges().size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"faces\": [\n";
  for (std::size_t i = 0; i < c.faces().size(); ++i) {
    const auto& f = c.faces()[i];
    out << "    {\"id\": " << quoted(f.id) << ", \"boundary\": [";
    for (std::size_t k = 0; k < f.boundary.size(); ++k) {
      if (k) out << ", ";
      out << "[" << quoted(c.edges()[f.boundary[k].edge].id) << ", \""
          << to_string(f.boundary[k].side) << "\"]";
    }
    out << "]}" << (i + 1 < c.faces().size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string export_dot(const IntersectionComplex& c) {
  std::ostringstream out;
  out << "graph " << quoted(c.meta().name.empty() ? "complex" : c.meta().name) << " {\n";
  for (const auto& f : c.faces()) out << "  " << quoted(f.id) << ";\n";
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    const auto& edge = c.edges()[e];
    const auto& fa = c.faces()[c.face_of(2 * e)].id;
    const auto& fb = c.faces()[c.face_of(2 * e + 1)].id;
    out << "  " << quoted(fa) << " -- " << quoted(fb) << " [label=" << quoted(edge.id)
        << ", taillabel=" << quoted(edge.label_a.str())
        << ", headlabel=" << quoted(edge.label_b.str());
    if (edge.nodal) out << ", style=dashed";
    out << "];\n";
  }
  // Triangles of the dual: the faces meeting at each triple point.
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    out << "  // vertex " << v << ":";
    for (std::size_t d = 0; d < c.dart_count(); ++d) {
      if (c.head(d) == v) out << " " << c.faces()[c.face_of(d)].id;
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace k3deg
