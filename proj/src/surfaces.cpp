#include "k3deg/surfaces.hpp"

#include <cctype>
#include <numeric>

#include "k3deg/error.hpp"

namespace k3deg::surfaces {

namespace {

std::size_t check_index(const AnticanonicalCycle& cycle, std::size_t i) {
  if (cycle.selfints.empty()) throw PreconditionError("empty anticanonical cycle");
  if (i >= cycle.selfints.size()) {
    throw PreconditionError("component " + std::to_string(i) + " out of range for a cycle of length " +
                            std::to_string(cycle.selfints.size()));
  }
  return cycle.selfints.size();
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool read_int(std::string_view s, std::size_t& pos, std::int64_t& out) {
  const std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  out = std::stoll(std::string(s.substr(start, pos - start)));
  return true;
}

// New exceptional class E_{k+1} appended to every class of the cycle.
std::vector<DivisorClass> extend_classes(const std::vector<DivisorClass>& classes) {
  auto out = classes;
  for (auto& c : out) c.coefficients.push_back(0);
  return out;
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  if (x.coefficients.size() != y.coefficients.size())
    throw PreconditionError("divisor classes live in different lattices");
  DivisorClass out = x;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += y.coefficients[i];
  return out;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  if (x.coefficients.size() != y.coefficients.size())
    throw PreconditionError("divisor classes live in different lattices");
  DivisorClass out = x;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] -= y.coefficients[i];
  return out;
}

DivisorClass PicardLattice::zero() const { return DivisorClass{std::vector<std::int64_t>(rank(), 0)}; }

DivisorClass PicardLattice::hyperplane() const {
  auto c = zero();
  c.coefficients[0] = 1;
  return c;
}

DivisorClass PicardLattice::exceptional(std::size_t i) const {
  if (i == 0 || i > k_) throw PreconditionError("no exceptional class E" + std::to_string(i));
  auto c = zero();
  c.coefficients[i] = 1;
  return c;
}

DivisorClass PicardLattice::anticanonical() const {
  auto c = zero();
  c.coefficients[0] = 3;
  for (std::size_t i = 1; i <= k_; ++i) c.coefficients[i] = -1;
  return c;
}

void PicardLattice::check(const DivisorClass& c) const {
  if (c.coefficients.size() != rank()) {
    throw PreconditionError("class has " + std::to_string(c.coefficients.size()) +
                            " coefficients, lattice rank is " + std::to_string(rank()));
  }
}

std::int64_t PicardLattice::pairing(const DivisorClass& x, const DivisorClass& y) const {
  check(x);
  check(y);
  std::int64_t sum = x.coefficients[0] * y.coefficients[0];
  for (std::size_t i = 1; i <= k_; ++i) sum -= x.coefficients[i] * y.coefficients[i];
  return sum;
}

DivisorClass PicardLattice::parse(std::string_view text) const {
  DivisorClass out = zero();
  std::size_t pos = 0;
  bool first = true;
  skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError("empty divisor class");
  while (pos < text.size()) {
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      throw ParseError("expected + or - at position " + std::to_string(pos + 1) + " in \"" +
                       std::string(text) + "\"");
    }
    std::int64_t coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      read_int(text, pos, coeff);
    if (pos < text.size() && text[pos] == 'H') {
      ++pos;
      out.coefficients[0] += sign * coeff;
    } else if (pos < text.size() && text[pos] == 'E') {
      ++pos;
      std::int64_t idx = 0;
      if (!read_int(text, pos, idx) || idx < 1 || static_cast<std::size_t>(idx) > k_) {
        throw ParseError("bad exceptional class in \"" + std::string(text) + "\" (lattice has E1..E" +
                         std::to_string(k_) + ")");
      }
      out.coefficients[static_cast<std::size_t>(idx)] += sign * coeff;
    } else {
      throw ParseError("expected H or E<i> at position " + std::to_string(pos + 1) + " in \"" +
                       std::string(text) + "\"");
    }
    first = false;
    skip_spaces(text, pos);
  }
  return out;
}

std::string PicardLattice::format(const DivisorClass& c) const {
  check(c);
  std::string out;
  for (std::size_t i = 0; i <= k_; ++i) {
    const std::int64_t a = c.coefficients[i];
    if (a == 0) continue;
    if (a < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (a != 1 && a != -1) out += std::to_string(a < 0 ? -a : a);
    out += i == 0 ? std::string("H") : "E" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool is_anticanonical_cycle(const PicardLattice& lattice, const AnticanonicalCycle& cycle) {
  if (!cycle.classes || cycle.selfints.empty()) return false;
  const auto& cls = *cycle.classes;
  const std::size_t n = cycle.selfints.size();
  if (cls.size() != n) return false;
  for (const auto& c : cls)
    if (c.coefficients.size() != lattice.rank()) return false;

  DivisorClass sum = lattice.zero();
  for (std::size_t i = 0; i < n; ++i) {
    sum = sum + cls[i];
    const std::int64_t nodal_shift = n == 1 ? 2 : 0;
    if (lattice.pairing(cls[i], cls[i]) != cycle.selfints[i] + nodal_shift) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t expected = 0;
      if (n == 2)
        expected = 2;
      else if (j == i + 1 || (i == 0 && j == n - 1))
        expected = 1;
      if (lattice.pairing(cls[i], cls[j]) != expected) return false;
    }
  }
  return sum == lattice.anticanonical();
}

std::int64_t cycle_self_intersection(const AnticanonicalCycle& cycle) {
  const std::size_t n = cycle.selfints.size();
  if (n == 0) throw PreconditionError("empty anticanonical cycle");
  const std::int64_t total = std::accumulate(cycle.selfints.begin(), cycle.selfints.end(), std::int64_t{0});
  return n == 1 ? total + 2 : total + 2 * static_cast<std::int64_t>(n);
}

AnticanonicalCycle blow_down_cycle(const AnticanonicalCycle& cycle, std::size_t i) {
  const std::size_t n = check_index(cycle, i);
  if (n < 3) {
    throw PreconditionError("blow-down on a cycle of length " + std::to_string(n) +
                            " is not supported");
  }
  if (cycle.selfints[i] != -1) {
    throw PreconditionError("component " + std::to_string(i) + " has self-intersection " +
                            std::to_string(cycle.selfints[i]) + ", not -1");
  }
  AnticanonicalCycle out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i) continue;
    std::int64_t a = cycle.selfints[k];
    if (k == (i + 1) % n || k == (i + n - 1) % n) a += 1;
    out.selfints.push_back(a);
  }
  return out;
}

AnticanonicalCycle corner_blow_up_cycle(const AnticanonicalCycle& cycle, std::size_t i) {
  const std::size_t n = check_index(cycle, i);
  if (n == 1) throw PreconditionError("corner blow-up of a nodal anticanonical curve is not supported");
  const std::size_t j = (i + 1) % n;
  AnticanonicalCycle out = cycle;
  out.selfints[i] -= 1;
  out.selfints[j] -= 1;
  out.selfints.insert(out.selfints.begin() + static_cast<std::ptrdiff_t>(i + 1), -1);
  if (cycle.classes) {
    auto cls = extend_classes(*cycle.classes);
    DivisorClass e{std::vector<std::int64_t>(cls.front().coefficients.size(), 0)};
    e.coefficients.back() = 1;
    cls[i] = cls[i] - e;
    cls[j] = cls[j] - e;
    cls.insert(cls.begin() + static_cast<std::ptrdiff_t>(i + 1), e);
    out.classes = std::move(cls);
  }
  return out;
}

AnticanonicalCycle interior_blow_up_cycle(const AnticanonicalCycle& cycle, std::size_t i,
                                          std::int64_t count) {
  check_index(cycle, i);
  if (count < 1) throw PreconditionError("blow-up count must be positive");
  AnticanonicalCycle out = cycle;
  out.selfints[i] -= count;
  if (cycle.classes) {
    auto cls = *cycle.classes;
    for (std::int64_t c = 0; c < count; ++c) {
      cls = extend_classes(cls);
      cls[i].coefficients.back() = -1;
    }
    out.classes = std::move(cls);
  }
  return out;
}

AnticanonicalCycle parse_cycle_literal(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != '[')
    throw ParseError("cycle literal must start with [");
  ++pos;
  AnticanonicalCycle out;
  skip_spaces(text, pos);
  while (pos < text.size() && text[pos] != ']') {
    std::int64_t v = 0;
    if (!read_int(text, pos, v))
      throw ParseError("expected an integer at position " + std::to_string(pos + 1));
    out.selfints.push_back(v);
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_spaces(text, pos);
    } else if (pos < text.size() && text[pos] != ']') {
      throw ParseError("expected , or ] at position " + std::to_string(pos + 1));
    }
  }
  if (pos >= text.size()) throw ParseError("cycle literal is missing ]");
  ++pos;
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after cycle literal");
  if (out.selfints.empty()) throw ParseError("empty cycle literal");
  return out;
}

std::string format_cycle(const AnticanonicalCycle& cycle) {
  std::string out = "[";
  for (std::size_t i = 0; i < cycle.selfints.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cycle.selfints[i]);
  }
  return out + "]";
}

}  // namespace k3deg::surfaces
