#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "htg/graph.hpp"

namespace htg {

/// graph6 encoding (McKay): N(n) header followed by the upper triangle of the
/// adjacency matrix in column-major order, packed big-endian into 6-bit
/// groups offset by 63. No trailing newline.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and a trailing newline.
/// Throws HtgError(Graph6Format) on malformed input.
Graph from_graph6(std::string_view text);

/// Returns a DOT attribute list body (e.g. "color=red") for an edge, or an
/// empty string for none.
using EdgeAttributes = std::function<std::string(Edge)>;

std::string to_dot(const Graph& g, std::string_view name = "G",
                   const EdgeAttributes& attributes = {});

}  // namespace htg
