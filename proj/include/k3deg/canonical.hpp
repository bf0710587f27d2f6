#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "k3deg/complex.hpp"

namespace k3deg {

/// Isomorphism invariant of a labeled sphere map. Ids, the a/b naming of
/// edge sides, boundary rotation and global orientation do not enter.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// Position of each edge in the minimizing traversal.
  std::vector<std::size_t> edge_rank;
};

/// Throws PreconditionError for a disconnected complex.
CanonicalLabeling canonical_labeling(const IntersectionComplex& c);
CanonicalCode canonical_form(const IntersectionComplex& c);
bool is_isomorphic(const IntersectionComplex& a, const IntersectionComplex& b);

}  // namespace k3deg
