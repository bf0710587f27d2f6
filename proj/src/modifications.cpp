#include "k3deg/modifications.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "k3deg/canonical.hpp"
#include "k3deg/error.hpp"

namespace k3deg {

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::TypeI:
      return "I";
    case MoveKind::TypeIInverse:
      return "I_inv";
    case MoveKind::TypeII:
      return "II";
    case MoveKind::BlowUp:
      return "blowup";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view s) noexcept {
  if (s == "I") return MoveKind::TypeI;
  if (s == "I_inv") return MoveKind::TypeIInverse;
  if (s == "II") return MoveKind::TypeII;
  if (s == "blowup") return MoveKind::BlowUp;
  return std::nullopt;
}

std::string describe(const Move& m) {
  std::string s = std::string(to_string(m.kind)) + " " + m.edge;
  if (m.kind == MoveKind::BlowUp)
    s += " side " + std::string(to_string(m.side)) + " x" + std::to_string(m.count);
  return s;
}

IntersectionComplex apply_type1(const IntersectionComplex& c, std::string_view edge, bool inverse) {
  const std::size_t e = c.edge_index(edge);
  auto edges = c.edges();
  if (edges[e].nodal) throw InvalidMove("Type I on nodal edge " + edges[e].id + " is not supported");
  const int step = inverse ? -1 : 1;
  edges[e].label_a -= step;
  edges[e].label_b += step;
  return c.with_edges(std::move(edges));
}

std::optional<std::string> type2_obstruction(const IntersectionComplex& c, std::size_t e) {
  const auto& rec = c.edges()[e];
  if (rec.nodal) return "edge " + rec.id + " is nodal";
  if (rec.label_a != -1 || rec.label_b != -1) {
    return "edge " + rec.id + " has labels (" + rec.label_a.str() + ", " + rec.label_b.str() +
           "), Type II needs (-1, -1)";
  }
  const std::size_t d = 2 * e;
  const std::size_t dp = d + 1;
  if (c.face_of(d) == c.face_of(dp)) return "degenerate flip: edge " + rec.id + " is self-glued";
  if (c.corner_counts()[c.head(d)] != 3 || c.corner_counts()[c.head(dp)] != 3)
    return "edge " + rec.id + " does not end at triple points";
  std::array<std::size_t, 4> quad{c.face_of(d), c.face_of(dp),
                                  c.face_of(IntersectionComplex::partner(c.next(d))),
                                  c.face_of(IntersectionComplex::partner(c.next(dp)))};
  std::sort(quad.begin(), quad.end());
  if (std::adjacent_find(quad.begin(), quad.end()) != quad.end())
    return "degenerate flip: quadrilateral around edge " + rec.id + " has repeated vertices";
  return std::nullopt;
}

IntersectionComplex apply_type2(const IntersectionComplex& c, std::string_view edge) {
  const std::size_t e = c.edge_index(edge);
  if (auto why = type2_obstruction(c, e)) throw InvalidMove(*why);

  // d runs into vertex v, dp into vertex u. Contract the edge and re-expand
  // it between the third faces at v and at u.
  const std::size_t d = 2 * e;
  const std::size_t dp = d + 1;
  const std::size_t at_v = IntersectionComplex::partner(c.next(d));
  const std::size_t at_u = IntersectionComplex::partner(c.next(dp));

  auto faces = c.faces();
  auto erase_dart = [&](std::size_t dart) {
    auto& b = faces[c.face_of(dart)].boundary;
    b.erase(std::find(b.begin(), b.end(), IntersectionComplex::unflat(dart)));
  };
  auto insert_after = [&](std::size_t anchor, Dart fresh) {
    auto& b = faces[c.face_of(anchor)].boundary;
    auto it = std::find(b.begin(), b.end(), IntersectionComplex::unflat(anchor));
    b.insert(it + 1, fresh);
  };
  erase_dart(d);
  erase_dart(dp);
  insert_after(at_v, Dart{e, Side::A});
  insert_after(at_u, Dart{e, Side::B});
  return IntersectionComplex(c.meta(), c.edges(), std::move(faces));
}

IntersectionComplex blow_up_edge_side(const IntersectionComplex& c, std::string_view edge,
                                      Side side, std::int64_t count) {
  const std::size_t e = c.edge_index(edge);
  if (count < 1) throw InvalidMove("blow-up count must be positive");
  auto edges = c.edges();
  edges[e].label(side) -= count;
  return c.with_edges(std::move(edges));
}

IntersectionComplex apply_move(const IntersectionComplex& c, const Move& m) {
  switch (m.kind) {
    case MoveKind::TypeI:
      return apply_type1(c, m.edge, false);
    case MoveKind::TypeIInverse:
      return apply_type1(c, m.edge, true);
    case MoveKind::TypeII:
      return apply_type2(c, m.edge);
    case MoveKind::BlowUp:
      return blow_up_edge_side(c, m.edge, m.side, m.count);
  }
  throw InvalidMove("unknown move kind");
}

namespace {

std::vector<Move> moves_in_order(const IntersectionComplex& c, const std::vector<std::size_t>& rank,
                                 const MoveSet& set) {
  std::vector<std::size_t> order(c.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });

  std::vector<Move> out;
  if (set.type1) {
    for (MoveKind k : {MoveKind::TypeI, MoveKind::TypeIInverse}) {
      for (std::size_t e : order)
        if (!c.edges()[e].nodal) out.push_back(Move{k, c.edges()[e].id});
    }
  }
  if (set.type2) {
    for (std::size_t e : order)
      if (!type2_obstruction(c, e)) out.push_back(Move{MoveKind::TypeII, c.edges()[e].id});
  }
  return out;
}

}  // namespace

std::vector<Move> enumerate_moves(const IntersectionComplex& c) {
  if (!validate(c).ok()) throw PreconditionError("enumerate_moves: complex fails validation");
  return moves_in_order(c, canonical_labeling(c).edge_rank, MoveSet{});
}

MoveSet parse_move_set(std::string_view s) {
  MoveSet set{false, false};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const auto token = s.substr(pos, comma - pos);
    if (token == "I")
      set.type1 = true;
    else if (token == "II")
      set.type2 = true;
    else
      throw ParseError("unknown move kind \"" + std::string(token) + "\" (expected I or II)");
    pos = comma + 1;
  }
  return set;
}

SearchResult search_path(const IntersectionComplex& src, const IntersectionComplex& dst,
                         const SearchOptions& opts) {
  if (!validate(src).ok()) throw PreconditionError("search: source complex fails validation");
  if (!validate(dst).ok()) throw PreconditionError("search: target complex fails validation");
  if (degree(src) != degree(dst)) {
    throw DegreeMismatch("degree mismatch: " + std::to_string(degree(src)) + " vs " +
                         std::to_string(degree(dst)));
  }

  struct Node {
    IntersectionComplex complex;
    std::vector<std::size_t> edge_rank;
    std::size_t parent;
    Move move;
    std::size_t depth;
  };
  constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();

  const CanonicalCode target = canonical_form(dst);
  auto start = canonical_labeling(src);
  SearchResult result;

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back(Node{src, std::move(start.edge_rank), kRoot, Move{}, 0});
  seen.emplace(start.code.bytes, 0);

  auto finish = [&](std::size_t goal) {
    for (std::size_t i = goal; nodes[i].parent != kRoot; i = nodes[i].parent)
      result.path.push_back(nodes[i].move);
    std::reverse(result.path.begin(), result.path.end());
    IntersectionComplex replay = src;
    for (const auto& m : result.path) replay = apply_move(replay, m);
    if (canonical_form(replay) != target)
      throw std::logic_error("search_path: replayed path does not reach the target");
    result.found = true;
    result.visited = seen.size();
    return result;
  };

  if (start.code == target) return finish(0);

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    if (nodes[i].depth >= opts.max_depth) continue;
    for (auto& m : moves_in_order(nodes[i].complex, nodes[i].edge_rank, opts.moves)) {
      auto next = apply_move(nodes[i].complex, m);
      auto lab = canonical_labeling(next);
      if (seen.count(lab.code.bytes)) continue;
      if (seen.size() >= opts.max_states) {
        result.truncated = true;
        result.visited = seen.size();
        return result;
      }
      const std::size_t id = nodes.size();
      seen.emplace(lab.code.bytes, id);
      const bool hit = lab.code == target;
      nodes.push_back(Node{std::move(next), std::move(lab.edge_rank), i, std::move(m),
                           nodes[i].depth + 1});
      if (hit) return finish(id);
      frontier.push_back(id);
    }
  }
  result.visited = seen.size();
  return result;
}

std::vector<Move> parse_move_script(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("move script: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("move script must be a JSON array");
  std::vector<Move> moves;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& step = doc[i];
    const std::string where = "step " + std::to_string(i);
    if (!step.is_object()) throw ParseError(where + " must be an object");
    for (const auto& [key, _] : step.items()) {
      if (key != "kind" && key != "edge" && key != "side" && key != "count")
        throw ParseError(where + ": unknown key \"" + key + "\"");
    }
    if (!step.contains("kind") || !step["kind"].is_string())
      throw ParseError(where + ": missing string \"kind\"");
    if (!step.contains("edge") || !step["edge"].is_string())
      throw ParseError(where + ": missing string \"edge\"");
    Move m;
    auto kind = move_kind_from_string(step["kind"].get<std::string>());
    if (!kind) throw ParseError(where + ": unknown kind \"" + step["kind"].get<std::string>() + "\"");
    m.kind = *kind;
    m.edge = step["edge"].get<std::string>();
    if (m.kind == MoveKind::BlowUp) {
      if (!step.contains("side") || !step["side"].is_string())
        throw ParseError(where + ": blowup needs \"side\"");
      const auto side = step["side"].get<std::string>();
      if (side != "a" && side != "b") throw ParseError(where + ": side must be \"a\" or \"b\"");
      m.side = side == "a" ? Side::A : Side::B;
      if (step.contains("count")) {
        if (!step["count"].is_number_integer() || step["count"].get<std::int64_t>() < 1)
          throw ParseError(where + ": count must be a positive integer");
        m.count = step["count"].get<std::int64_t>();
      }
    } else if (step.contains("side") || step.contains("count")) {
      throw ParseError(where + ": \"side\" and \"count\" apply to blowup only");
    }
    moves.push_back(std::move(m));
  }
  return moves;
}

std::string write_move_script(const std::vector<Move>& moves) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& m = moves[i];
    out << "  {\"kind\": \"" << to_string(m.kind) << "\", \"edge\": " << nlohmann::json(m.edge).dump();
    if (m.kind == MoveKind::BlowUp)
      out << ", \"side\": \"" << to_string(m.side) << "\", \"count\": " << m.count;
    out << "}" << (i + 1 < moves.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

}  // namespace k3deg
