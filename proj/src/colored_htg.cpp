#include "htg/colored_htg.hpp"

#include <stdexcept>
#include <string>

#include "htg/errors.hpp"

namespace htg {

std::string_view color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
  }
  return "?";
}

ColoredHtg::ColoredHtg(HtgParams params,
                       std::vector<std::array<Vertex, 3>> neighbor_by_color,
                       std::vector<GroupElement> element_of_vertex)
    : params_(params),
      group_(group_spec(params)),
      neighbor_by_color_(std::move(neighbor_by_color)),
      element_of_vertex_(std::move(element_of_vertex)) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (neighbor_by_color_.size() != n || element_of_vertex_.size() != n) {
    throw std::logic_error("colored HTG: vertex count differs from |G|");
  }

  vertex_of_element_.assign(n, -1);
  std::vector<Edge> edges;
  edges.reserve(3 * n / 2);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const std::size_t index = element_index(group_, element_of_vertex_[v]);
    if (index >= n || vertex_of_element_[index] != -1) {
      throw std::logic_error("colored HTG: element labels are not a bijection");
    }
    vertex_of_element_[index] = v;
    for (int c = 0; c < 3; ++c) {
      const Vertex w = neighbor_by_color_[v][c];
      if (w < 0 || w >= static_cast<Vertex>(n) ||
          neighbor_by_color_[w][c] != v) {
        throw std::logic_error("colored HTG: color class " +
                               std::string(color_name(kColors[c])) +
                               " is not a perfect matching");
      }
      if (v < w) edges.emplace_back(v, w);
    }
  }
  graph_ = build_graph(static_cast<int>(n), edges);
}

Color ColoredHtg::color_of_edge(Vertex u, Vertex v) const {
  if (u >= 0 && u < order()) {
    for (Color c : kColors) {
      if (neighbor(u, c) == v) return c;
    }
  }
  throw HtgError(Errc::NotAnEdge,
                 "{" + std::to_string(u) + "," + std::to_string(v) + "}");
}

std::vector<Edge> ColoredHtg::edges_of_color(Color c) const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < order(); ++v) {
    const Vertex w = neighbor(v, c);
    if (v < w) out.emplace_back(v, w);
  }
  return out;
}

}  // namespace htg
