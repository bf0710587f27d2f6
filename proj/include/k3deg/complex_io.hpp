#pragma once

#include <string>
#include <string_view>

#include "k3deg/complex.hpp"

namespace k3deg {

struct ParseOptions {
  /// Reject input whose surface is disconnected or not a sphere.
  bool require_sphere = true;
};

/// Reads the JSON complex format:
///   {"meta": {"name", "claimed_degree"?, "claimed_index"?},
///    "edges": [{"id", "label_a", "label_b", "nodal"?}],
///    "faces": [{"id", "boundary": [[edge-id, "a"|"b"], ...]}]}
/// Unknown keys are rejected. Labels are JSON integers, or decimal strings
/// when they do not fit in 64 bits. Throws ParseError or StructureError.
IntersectionComplex parse_complex(std::string_view text, const ParseOptions& opts = {});
IntersectionComplex load_complex(const std::string& path, const ParseOptions& opts = {});

/// Canonical layout: parse_complex followed by write_complex reproduces
/// any file written by write_complex byte for byte.
std::string write_complex(const IntersectionComplex& c);

/// Graphviz text: faces as nodes, double curves as edges carrying the
/// per-side labels, and one comment line per triangle of the dual.
std::string export_dot(const IntersectionComplex& c);

}  // namespace k3deg
