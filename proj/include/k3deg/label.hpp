#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace k3deg {

/// Self-intersection number of a double curve on one side. Unbounded:
/// repeated Type I moves can push labels arbitrarily far.
using Label = boost::multiprecision::cpp_int;

inline std::string to_string(const Label& v) { return v.str(); }

}  // namespace k3deg
