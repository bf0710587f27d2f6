#include "k3deg/canonical.hpp"

#include <cstdint>
#include <optional>

#include "k3deg/error.hpp"

namespace k3deg {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFFU));
}

struct Traversal {
  std::string code;
  std::vector<std::size_t> order;  // darts in discovery order
};

// Breadth-first numbering from `root`, following the face successor (or its
// inverse when `reversed`) before the edge partner.
Traversal traverse(const IntersectionComplex& c, const std::vector<std::string>& labels,
                   std::size_t root, bool reversed) {
  const std::size_t n = c.dart_count();
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> num(n, kNone);
  Traversal t;
  t.order.reserve(n);
  num[root] = 0;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const std::size_t d = t.order[head];
    const std::size_t succ = reversed ? c.prev(d) : c.next(d);
    for (std::size_t x : {succ, IntersectionComplex::partner(d)}) {
      if (num[x] == kNone) {
        num[x] = static_cast<std::uint32_t>(t.order.size());
        t.order.push_back(x);
      }
    }
  }
  if (t.order.size() != n) throw PreconditionError("canonical_form: complex is not connected");

  put_u32(t.code, static_cast<std::uint32_t>(n));
  for (std::size_t d : t.order) {
    const std::size_t succ = reversed ? c.prev(d) : c.next(d);
    put_u32(t.code, num[succ]);
    put_u32(t.code, num[IntersectionComplex::partner(d)]);
    t.code.push_back(c.edges()[d / 2].nodal ? '\1' : '\0');
    put_u32(t.code, static_cast<std::uint32_t>(labels[d].size()));
    t.code += labels[d];
  }
  return t;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 0xF]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const IntersectionComplex& c) {
  if (!c.connected()) throw PreconditionError("canonical_form: complex is not connected");
  std::vector<std::string> labels(c.dart_count());
  for (std::size_t d = 0; d < c.dart_count(); ++d) labels[d] = to_string(c.dart_label(d));

  std::optional<Traversal> best;
  for (std::size_t root = 0; root < c.dart_count(); ++root) {
    for (bool reversed : {false, true}) {
      auto t = traverse(c, labels, root, reversed);
      if (!best || t.code < best->code) best = std::move(t);
    }
  }

  CanonicalLabeling out;
  out.code.bytes = std::move(best->code);
  out.edge_rank.assign(c.edges().size(), c.edges().size());
  std::size_t rank = 0;
  for (std::size_t d : best->order) {
    auto& r = out.edge_rank[d / 2];
    if (r == c.edges().size()) r = rank++;
  }
  return out;
}

CanonicalCode canonical_form(const IntersectionComplex& c) { return canonical_labeling(c).code; }

bool is_isomorphic(const IntersectionComplex& a, const IntersectionComplex& b) {
  if (a.dart_count() != b.dart_count() || a.faces().size() != b.faces().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace k3deg
