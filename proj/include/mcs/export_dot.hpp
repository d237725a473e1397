#pragma once

#include <string>

#include "mcs/colored_tree.hpp"
#include "mcs/consistency.hpp"

namespace mcs {

// Graphviz rendering: vertex fill encodes the color; highlighted vertices
// (typically a solution) are drawn as boxes with a double border.
std::string to_dot(const ColoredTree& tree,
                   const VertexSubset* highlight = nullptr);

}  // namespace mcs
