#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "htg/dihedral_group.hpp"
#include "htg/graph.hpp"
#include "htg/params.hpp"

namespace htg {

// Red, blue and green edges are {g,gt}, {g,gtx} and {g,gty}.
enum class Color : std::uint8_t { Red = 0, Blue = 1, Green = 2 };

inline constexpr std::array<Color, 3> kColors = {Color::Red, Color::Blue,
                                                 Color::Green};

std::string_view color_name(Color c);

/// Cubic graph with a proper 3-edge-coloring and a bijection between its
/// vertices and the elements of the group G.
class ColoredHtg {
 public:
  /// `neighbor_by_color[v][c]` is the neighbor of v along color c. Throws
  /// std::logic_error unless every color class is a perfect matching and the
  /// element labels form a bijection onto G.
  ColoredHtg(HtgParams params, std::vector<std::array<Vertex, 3>> neighbor_by_color,
             std::vector<GroupElement> element_of_vertex);

  const Graph& graph() const { return graph_; }
  const HtgParams& params() const { return params_; }
  const GroupSpec& group() const { return group_; }
  int order() const { return graph_.order(); }

  Vertex neighbor(Vertex v, Color c) const {
    return neighbor_by_color_[v][static_cast<int>(c)];
  }
  /// Throws HtgError(NotAnEdge).
  Color color_of_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges_of_color(Color c) const;

  const GroupElement& element_of(Vertex v) const { return element_of_vertex_[v]; }
  Vertex vertex_of(const GroupElement& g) const {
    return vertex_of_element_[element_index(group_, g)];
  }

 private:
  HtgParams params_;
  GroupSpec group_;
  Graph graph_;
  std::vector<std::array<Vertex, 3>> neighbor_by_color_;
  std::vector<GroupElement> element_of_vertex_;
  std::vector<Vertex> vertex_of_element_;
};

}  // namespace htg
