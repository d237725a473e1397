#include "mcs/export_dot.hpp"

#include <array>
#include <sstream>

namespace mcs {

namespace {

// ColorBrewer-style palette; cycles past 12 colors.
constexpr std::array<const char*, 12> kPalette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};

}  // namespace

std::string to_dot(const ColoredTree& tree, const VertexSubset* highlight) {
  std::ostringstream out;
  out << "graph mcs {\n";
  out << "  node [style=filled];\n";
  for (VertexId v = 1; v <= tree.vertex_count(); ++v) {
    const Color c = tree.color(v);
    const char* fill =
        kPalette[static_cast<size_t>((c - 1) % static_cast<int>(kPalette.size()))];
    out << "  " << v << " [label=\"" << v << " (c" << c << ")\", fillcolor=\""
        << fill << "\"";
    if (highlight != nullptr && highlight->contains(v)) {
      out << ", shape=box, peripheries=2";
    } else {
      out << ", shape=circle";
    }
    out << "];\n";
  }
  for (const Edge& e : tree.edges()) {
    out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mcs
