#pragma once

#include <string>
#include <string_view>

#include "isolation/errors.hpp"
#include "isolation/graph.hpp"

namespace isolation {

/// Parses one graph6 line (trailing newline/CR tolerated). Only the
/// single-byte size header is supported, i.e. n <= 62.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding of g. Throws CapExceededError for n > 62.
std::string emit_graph6(const Graph& g);

}  // namespace isolation
