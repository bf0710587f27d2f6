#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3deg::surfaces {

/// Coefficients of H, E1, ..., Ek.
struct DivisorClass {
  std::vector<std::int64_t> coefficients;

  bool operator==(const DivisorClass&) const = default;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);

/// Pic of the plane blown up k times, with the diagonal form (+1, -1, ..., -1).
class PicardLattice {
 public:
  explicit PicardLattice(std::size_t exceptional_count) : k_(exceptional_count) {}

  std::size_t exceptional_count() const noexcept { return k_; }
  std::size_t rank() const noexcept { return k_ + 1; }

  DivisorClass zero() const;
  DivisorClass hyperplane() const;
  /// E_i, 1-based.
  DivisorClass exceptional(std::size_t i) const;
  /// 3H - E1 - ... - Ek.
  DivisorClass anticanonical() const;

  /// Throws PreconditionError on a dimension mismatch.
  std::int64_t pairing(const DivisorClass& x, const DivisorClass& y) const;

  /// Parses literals such as "H-E2-E4", "2H-E1", "E1-E3". Throws ParseError.
  DivisorClass parse(std::string_view text) const;
  std::string format(const DivisorClass& c) const;

 private:
  void check(const DivisorClass& c) const;
  std::size_t k_;
};

/// Boundary components in cyclic order. A single entry is a nodal curve,
/// whose self-intersection is selfints[0] + 2.
struct AnticanonicalCycle {
  std::vector<std::int64_t> selfints;
  std::optional<std::vector<DivisorClass>> classes;

  bool operator==(const AnticanonicalCycle&) const = default;
};

/// Checks the class data: consecutive components meet once (twice on a
/// 2-cycle), others not at all; each square matches its listed number; the
/// classes sum to 3H - sum(E_i).
bool is_anticanonical_cycle(const PicardLattice& lattice, const AnticanonicalCycle& cycle);

/// D^2 = sum(a_i) + 2n, or a + 2 for a nodal curve. Throws on an empty cycle.
std::int64_t cycle_self_intersection(const AnticanonicalCycle& cycle);

/// Contracts the (-1)-component i; its neighbours go up by one. Class data
/// is dropped. Throws PreconditionError if component i is not a (-1)-curve
/// or the cycle is shorter than 3.
AnticanonicalCycle blow_down_cycle(const AnticanonicalCycle& cycle, std::size_t i);

/// Blows up the node between components i and i+1: a new (-1)-component is
/// inserted there and both neighbours drop by one. Class data, if present,
/// gains a new exceptional class. Throws on a nodal (length 1) cycle.
AnticanonicalCycle corner_blow_up_cycle(const AnticanonicalCycle& cycle, std::size_t i);

/// Blows up `count` smooth points of component i.
AnticanonicalCycle interior_blow_up_cycle(const AnticanonicalCycle& cycle, std::size_t i,
                                          std::int64_t count);

/// "[-1,-5,-5]". Throws ParseError.
AnticanonicalCycle parse_cycle_literal(std::string_view text);
std::string format_cycle(const AnticanonicalCycle& cycle);

}  // namespace k3deg::surfaces
