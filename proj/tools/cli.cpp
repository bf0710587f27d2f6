#include "cli.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "k3deg/canonical.hpp"
#include "k3deg/complex.hpp"
#include "k3deg/complex_io.hpp"
#include "k3deg/error.hpp"
#include "k3deg/lattice.hpp"
#include "k3deg/modifications.hpp"
#include "k3deg/surfaces.hpp"

namespace k3deg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

constexpr int kSchema = 1;

ordered_json label_json(const Label& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ordered_json header() {
  ordered_json j;
  j["schema"] = kSchema;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_points(const std::vector<lattice::Point2>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + lattice::to_string(p);
  return s;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

ordered_json points_json(const std::vector<lattice::Point2>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

lattice::Point2 parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--point must look like x,y");
  try {
    std::size_t used = 0;
    const auto x = std::stoll(s.substr(0, comma), &used);
    if (used != comma) throw ParseError("--point must look like x,y");
    const auto rest = s.substr(comma + 1);
    const auto y = std::stoll(rest, &used);
    if (used != rest.size()) throw ParseError("--point must look like x,y");
    return {x, y};
  } catch (const std::logic_error&) {
    throw ParseError("--point must look like x,y");
  }
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string path;
  bool json = false;
  bool forbid_self_glued = false;
};

ordered_json report_json(const IntersectionComplex& c, const ValidationReport& r) {
  ordered_json j = header();
  j["name"] = c.meta().name;
  j["faces"] = c.faces().size();
  j["edges"] = c.edges().size();
  j["vertices"] = c.vertex_count();
  j["euler_characteristic"] = r.euler_characteristic;
  j["connected"] = r.connected;
  j["trivalent"] = r.trivalent();
  ordered_json bad = ordered_json::array();
  for (const auto& v : r.non_trivalent) bad.push_back({{"vertex", v.vertex}, {"corners", v.corners}});
  j["non_trivalent"] = bad;
  ordered_json tpf = ordered_json::array();
  for (const auto& e : r.edges) {
    tpf.push_back({{"edge", e.edge},
                   {"pass", e.result.pass},
                   {"expected", label_json(e.result.expected)},
                   {"got", label_json(e.result.got)}});
  }
  j["triple_point"] = tpf;
  j["triple_point_failures"] = r.triple_point_failures();
  j["self_glued"] = r.self_glued;
  j["warnings"] = r.warnings;
  if (r.sphere() && r.trivalent())
    j["degree"] = c.vertex_count();
  else
    j["degree"] = nullptr;
  j["ok"] = r.ok();
  return j;
}

void report_text(const IntersectionComplex& c, const ValidationReport& r, std::ostream& out) {
  out << "complex " << c.meta().name << ": " << c.faces().size() << " faces, " << c.edges().size()
      << " edges, " << c.vertex_count() << " vertices\n";
  out << "euler characteristic: " << r.euler_characteristic << "\n";
  out << "connected: " << yes_no(r.connected) << "\n";
  out << "trivalent: " << yes_no(r.trivalent()) << "\n";
  for (const auto& v : r.non_trivalent)
    out << "  vertex " << v.vertex << " has " << v.corners << " corners\n";
  out << "triple point formula: " << (r.edges.size() - r.triple_point_failures()) << "/"
      << r.edges.size() << " edges pass\n";
  for (const auto& e : r.edges) {
    if (!e.result.pass) {
      out << "  TPF failure on edge " << e.edge << ": expected " << e.result.expected.str() << ", got "
          << e.result.got.str() << "\n";
    }
  }
  if (!r.self_glued_allowed) {
    for (const auto& id : r.self_glued) out << "  self-glued edge " << id << " not allowed\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (r.sphere() && r.trivalent()) out << "degree " << c.vertex_count() << "\n";
  if (c.meta().claimed_degree) {
    out << "claimed degree " << *c.meta().claimed_degree
        << (r.sphere() && r.trivalent() &&
                    static_cast<std::size_t>(*c.meta().claimed_degree) == c.vertex_count()
                ? " (matches)"
                : " (does not match)")
        << "\n";
  }
  out << "verdict: " << (r.ok() ? "pass" : "fail") << "\n";
}

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const auto c = load_complex(a.path, ParseOptions{false});
  const auto r = validate(c, ValidationOptions{!a.forbid_self_glued});
  if (a.json)
    out << report_json(c, r).dump(2) << "\n";
  else
    report_text(c, r, out);
  return r.ok() ? kPass : kFail;
}

// -------------------------------------------------------------------- info

struct InfoArgs {
  std::string path;
  bool json = false;
};

int cmd_info(const InfoArgs& a, std::ostream& out) {
  const auto c = load_complex(a.path, ParseOptions{false});
  const auto r = validate(c);
  const bool sphere = r.sphere() && r.trivalent();
  const std::string code = c.connected() ? canonical_form(c).hex() : "";
  if (a.json) {
    ordered_json j = header();
    j["name"] = c.meta().name;
    j["faces"] = c.faces().size();
    j["edges"] = c.edges().size();
    j["vertices"] = c.vertex_count();
    j["euler_characteristic"] = r.euler_characteristic;
    j["degree"] = sphere ? ordered_json(c.vertex_count()) : ordered_json(nullptr);
    j["claimed_degree"] = c.meta().claimed_degree ? ordered_json(*c.meta().claimed_degree) : nullptr;
    j["claimed_index"] = c.meta().claimed_index ? ordered_json(*c.meta().claimed_index) : nullptr;
    j["canonical_code"] = code;
    ordered_json faces = ordered_json::array();
    for (std::size_t f = 0; f < c.faces().size(); ++f) {
      ordered_json labels = ordered_json::array();
      for (const auto& d : c.faces()[f].boundary)
        labels.push_back(label_json(c.edges()[d.edge].label(d.side)));
      faces.push_back({{"id", c.faces()[f].id}, {"cycle", labels}});
    }
    j["anticanonical_cycles"] = faces;
    j["ok"] = r.ok();
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "name: " << c.meta().name << "\n";
  out << "faces: " << c.faces().size() << ", edges: " << c.edges().size()
      << ", vertices: " << c.vertex_count() << ", euler characteristic: " << r.euler_characteristic
      << "\n";
  if (sphere) out << "degree " << c.vertex_count() << "\n";
  if (c.meta().claimed_degree) out << "claimed degree: " << *c.meta().claimed_degree << "\n";
  if (c.meta().claimed_index) out << "claimed index: " << *c.meta().claimed_index << " (unverified)\n";
  for (const auto& f : c.faces()) {
    out << "component " << f.id << " boundary cycle: [";
    for (std::size_t i = 0; i < f.boundary.size(); ++i)
      out << (i ? "," : "") << c.edges()[f.boundary[i].edge].label(f.boundary[i].side).str();
    out << "]\n";
  }
  if (!code.empty()) out << "canonical code: " << code << "\n";
  out << "valid: " << yes_no(r.ok()) << "\n";
  return kPass;
}

// ------------------------------------------------------------------ modify

struct ModifyArgs {
  std::string path;
  std::string script;
  std::string out_path;
  bool no_validate = false;
  bool json = false;
};

int cmd_modify(const ModifyArgs& a, std::ostream& out, std::ostream& err) {
  auto c = load_complex(a.path);
  const auto moves = parse_move_script(read_file(a.script));
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      c = apply_move(c, moves[i]);
    } catch (const InvalidMove& e) {
      err << "step " << i << " (" << describe(moves[i]) << "): " << e.what() << "\n";
      return kFail;
    }
    if (!a.no_validate) {
      const auto r = validate(c);
      if (!r.sphere() || !r.trivalent()) {
        err << "step " << i << " (" << describe(moves[i]) << "): result is not a trivalent sphere\n";
        return kFail;
      }
    }
  }
  const std::string text = write_complex(c);
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + a.out_path);
    f << text;
  }
  if (a.no_validate) return kPass;
  const auto r = validate(c);
  if (!a.out_path.empty()) {
    if (a.json) {
      out << report_json(c, r).dump(2) << "\n";
    } else {
      out << "applied " << moves.size() << " moves, wrote " << a.out_path << "\n";
      report_text(c, r, out);
    }
  } else if (!r.ok()) {
    err << "result fails validation (" << r.triple_point_failures() << " triple point failures)\n";
  }
  return r.ok() ? kPass : kFail;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  std::string src;
  std::string dst;
  std::string moves = "I,II";
  std::size_t max_depth = 8;
  std::size_t max_states = 2'000'000;
  bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto src = load_complex(a.src);
  const auto dst = load_complex(a.dst);
  SearchOptions opts;
  opts.max_depth = a.max_depth;
  opts.moves = parse_move_set(a.moves);
  opts.max_states = a.max_states;
  SearchResult r;
  try {
    r = search_path(src, dst, opts);
  } catch (const DegreeMismatch& e) {
    err << e.what() << "\n";
    if (a.json) {
      ordered_json j = header();
      j["found"] = false;
      j["error"] = "degree mismatch";
      out << j.dump(2) << "\n";
    }
    return kFail;
  }
  if (a.json) {
    ordered_json j = header();
    j["found"] = r.found;
    j["length"] = r.found ? ordered_json(r.path.size()) : ordered_json(nullptr);
    ordered_json path = ordered_json::array();
    for (const auto& m : r.path) path.push_back({{"kind", to_string(m.kind)}, {"edge", m.edge}});
    j["path"] = path;
    j["visited"] = r.visited;
    j["truncated"] = r.truncated;
    out << j.dump(2) << "\n";
  } else if (r.found) {
    out << "path length " << r.path.size() << " (" << r.visited << " complexes visited)\n";
    for (std::size_t i = 0; i < r.path.size(); ++i) out << "  " << i << ": " << describe(r.path[i]) << "\n";
  } else {
    out << "no path within depth " << a.max_depth << (r.truncated ? " (state limit reached)" : "")
        << " (" << r.visited << " complexes visited)\n";
  }
  return r.found ? kPass : kFail;
}

// ----------------------------------------------------------------- resolve

struct ResolveArgs {
  std::string path;
  bool json = false;
};

int cmd_resolve(const ResolveArgs& a, std::ostream& out) {
  const auto res = lattice::load_resolution(a.path);
  const auto& t = res.triangulation;
  const auto interior = lattice::interior_points(t.simplex);
  const auto rep = lattice::validate_triangulation(t);
  if (a.json) {
    ordered_json j = header();
    j["group_order"] = t.simplex.group_order;
    j["junior_points"] = t.simplex.points.size();
    j["interior_points"] = points_json(interior);
    j["triangles"] = t.triangles.size();
    j["triangulation_source"] = res.triangles_given ? "file" : "pulling";
    j["unimodular"] = rep.unimodular();
    j["covers"] = rep.covers();
    j["ok"] = rep.ok();
    out << j.dump(2) << "\n";
  } else {
    out << t.simplex.points.size() << " junior points, " << interior.size() << " interior, "
        << t.triangles.size() << " triangles, unimodular: " << yes_no(rep.unimodular()) << "\n";
    out << "group order: " << t.simplex.group_order << "\n";
    out << "interior points: " << format_points(interior) << "\n";
    out << "covers junior triangle: " << yes_no(rep.covers()) << "\n";
    out << "triangulation: " << (res.triangles_given ? "from file" : "pulling") << "\n";
  }
  return rep.ok() ? kPass : kFail;
}

// -------------------------------------------------------------------- star

struct StarArgs {
  std::string path;
  std::string point;
  bool json = false;
};

int cmd_star(const StarArgs& a, std::ostream& out) {
  const auto res = lattice::load_resolution(a.path);
  const auto p = parse_point(a.point);
  const auto fan = lattice::star_fan(res.triangulation, p);
  const auto selfints = lattice::toric_self_intersections(fan);
  const auto deg = lattice::toric_degree(fan);
  if (a.json) {
    ordered_json j = header();
    j["point"] = {p.x, p.y};
    j["rays"] = points_json(fan.rays);
    j["self_intersections"] = selfints;
    j["degree"] = deg;
    out << j.dump(2) << "\n";
  } else {
    out << "star at " << lattice::to_string(p) << ": " << fan.rays.size() << " rays\n";
    out << "rays: " << format_points(fan.rays) << "\n";
    out << "self-intersections: " << join(selfints) << "\n";
    out << "degree " << deg << "\n";
  }
  return kPass;
}

// ------------------------------------------------------------------- cycle

struct CycleArgs {
  std::string literal;
  std::vector<std::size_t> blow_down;
  std::vector<std::size_t> corner;
  std::vector<std::size_t> interior;
  std::int64_t count = 1;
  std::string classes;
  std::size_t k = 0;
  bool json = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

int cmd_cycle(const CycleArgs& a, std::ostream& out) {
  using namespace surfaces;
  AnticanonicalCycle cyc = parse_cycle_literal(a.literal);
  ordered_json j = header();
  j["input"] = cyc.selfints;
  j["self_intersection"] = cycle_self_intersection(cyc);
  if (!a.json) {
    out << "cycle " << format_cycle(cyc) << ", D^2 = " << cycle_self_intersection(cyc) << "\n";
  }

  int status = kPass;
  if (!a.classes.empty()) {
    std::size_t k = a.k;
    const auto parts = split(a.classes, ',');
    if (k == 0) {
      for (const auto& part : parts) {
        for (std::size_t pos = part.find('E'); pos != std::string::npos; pos = part.find('E', pos + 1)) {
          std::size_t end = pos + 1;
          while (end < part.size() && std::isdigit(static_cast<unsigned char>(part[end]))) ++end;
          if (end > pos + 1) k = std::max<std::size_t>(k, std::stoul(part.substr(pos + 1, end - pos - 1)));
        }
      }
    }
    PicardLattice lattice(k);
    std::vector<DivisorClass> cls;
    for (const auto& part : parts) cls.push_back(lattice.parse(part));
    cyc.classes = cls;
    const bool anti = is_anticanonical_cycle(lattice, cyc);
    j["anticanonical"] = anti;
    if (!a.json) out << "anticanonical cycle in Pic of P^2 blown up " << k << " times: " << yes_no(anti) << "\n";
    if (!anti) status = kFail;
  }

  // Operations run in the order blow-down, corner, interior.
  ordered_json steps = ordered_json::array();
  auto record = [&](const std::string& op, std::size_t i) {
    steps.push_back({{"op", op}, {"index", i}, {"result", cyc.selfints},
                     {"self_intersection", cycle_self_intersection(cyc)}});
    if (!a.json) {
      out << op << " at " << i << ": " << format_cycle(cyc) << ", D^2 = " << cycle_self_intersection(cyc)
          << "\n";
    }
  };
  for (std::size_t i : a.blow_down) {
    cyc = blow_down_cycle(cyc, i);
    record("blow-down", i);
  }
  for (std::size_t i : a.corner) {
    cyc = corner_blow_up_cycle(cyc, i);
    record("corner-blow-up", i);
  }
  for (std::size_t i : a.interior) {
    cyc = interior_blow_up_cycle(cyc, i, a.count);
    record("interior-blow-up", i);
  }
  j["steps"] = steps;
  j["result"] = cyc.selfints;
  if (a.json) out << j.dump(2) << "\n";
  return status;
}

// -------------------------------------------------------------- export-dot

struct DotArgs {
  std::string path;
};

int cmd_export_dot(const DotArgs& a, std::ostream& out) {
  out << export_dot(load_complex(a.path));
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of Type III K3 degenerations: intersection complexes, "
               "modifications, crepant resolutions and anticanonical cycles",
               "k3deg"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check sphere topology, trivalency and the triple point formula");
  validate_cmd->add_option("file", va.path, "Complex file")->required();
  validate_cmd->add_flag("--json", va.json, "Machine-readable report");
  validate_cmd->add_flag("--no-self-glued", va.forbid_self_glued, "Treat self-glued edges as failures");

  InfoArgs ia;
  auto* info_cmd = app.add_subcommand("info", "Summarize a complex");
  info_cmd->add_option("file", ia.path, "Complex file")->required();
  info_cmd->add_flag("--json", ia.json, "Machine-readable output");

  ModifyArgs ma;
  auto* modify_cmd = app.add_subcommand("modify", "Replay a move script on a complex");
  modify_cmd->add_option("file", ma.path, "Complex file")->required();
  modify_cmd->add_option("--script,-s", ma.script, "Move script (JSON array)")->required();
  modify_cmd->add_option("--out,-o", ma.out_path, "Output file (default: stdout)");
  modify_cmd->add_flag("--no-validate", ma.no_validate, "Skip validation");
  modify_cmd->add_flag("--json", ma.json, "Machine-readable report when writing to --out");

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Find a shortest modification sequence between two complexes");
  search_cmd->add_option("src", sa.src, "Source complex")->required();
  search_cmd->add_option("dst", sa.dst, "Target complex")->required();
  search_cmd->add_option("--moves", sa.moves, "Allowed kinds: I, II or I,II")->capture_default_str();
  search_cmd->add_option("--max-depth", sa.max_depth, "Maximum path length")->capture_default_str();
  search_cmd->add_option("--max-states", sa.max_states, "Stop after this many distinct complexes")
      ->capture_default_str();
  search_cmd->add_flag("--json", sa.json, "Machine-readable output");

  ResolveArgs ra;
  auto* resolve_cmd = app.add_subcommand("resolve", "Junior simplex and triangulation report");
  resolve_cmd->add_option("file", ra.path, "Resolution file")->required();
  resolve_cmd->add_flag("--json", ra.json, "Machine-readable output");

  StarArgs sta;
  auto* star_cmd = app.add_subcommand("star", "Fan of the compact divisor at an interior junior point");
  star_cmd->add_option("file", sta.path, "Resolution file")->required();
  star_cmd->add_option("--point,-p", sta.point, "Interior point x,y")->required();
  star_cmd->add_flag("--json", sta.json, "Machine-readable output");

  CycleArgs ca;
  auto* cycle_cmd = app.add_subcommand("cycle", "Anticanonical cycle arithmetic");
  cycle_cmd->add_option("cycle", ca.literal, "Self-intersections, e.g. [-1,-5,-5]")->required();
  cycle_cmd->add_option("--blow-down", ca.blow_down, "Contract the (-1)-component at this index");
  cycle_cmd->add_option("--corner", ca.corner, "Blow up the node after this component");
  cycle_cmd->add_option("--interior", ca.interior, "Blow up points on this component");
  cycle_cmd->add_option("--count", ca.count, "Points per --interior blow-up")->capture_default_str();
  cycle_cmd->add_option("--classes", ca.classes, "Comma-separated classes, e.g. H-E2-E4,E4,...");
  cycle_cmd->add_option("--k", ca.k, "Number of exceptional classes (default: largest index used)");
  cycle_cmd->add_flag("--json", ca.json, "Machine-readable output");

  DotArgs da;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz description of a complex");
  dot_cmd->add_option("file", da.path, "Complex file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(va, out);
    if (info_cmd->parsed()) return cmd_info(ia, out);
    if (modify_cmd->parsed()) return cmd_modify(ma, out, err);
    if (search_cmd->parsed()) return cmd_search(sa, out, err);
    if (resolve_cmd->parsed()) return cmd_resolve(ra, out);
    if (star_cmd->parsed()) return cmd_star(sta, out);
    if (cycle_cmd->parsed()) return cmd_cycle(ca, out);
    if (dot_cmd->parsed()) return cmd_export_dot(da, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StructureError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}

}  // namespace k3deg::cli
