#include "htg/htg.hpp"

#include <numeric>
#include <stdexcept>

namespace htg {

std::vector<Edge> construction_edges(int m, int n, int ell) {
  std::vector<Edge> edges;
  auto at = [n](int row, int column) {
    return row * n + ((column % n) + n) % n;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.emplace_back(at(i, j), at(i, j + 1));
      if (i != m - 1 && (i + j) % 2 == 1) edges.emplace_back(at(i, j), at(i + 1, j));
    }
  }
  for (int j = 0; j < n; ++j) {
    if ((j - m) % 2 == 0) edges.emplace_back(at(m - 1, j), at(0, j + ell));
  }
  return edges;
}

ColoredHtg build_htg(const HtgParams& p) {
  const int m = p.m();
  const int n = p.n();
  const GroupSpec spec = group_spec(p);

  std::vector<GroupElement> element_of_vertex(p.order());
  std::vector<Vertex> vertex_of_element(p.order());
  for (int i = 0; i < m; ++i) {
    for (int column = 0; column < n; ++column) {
      const int offset = ((column - i) % n + n) % n;
      const GroupElement g = make_element(spec, offset / 2, i, offset % 2);
      const Vertex v = htg_vertex(p, i, column);
      element_of_vertex[v] = g;
      vertex_of_element[element_index(spec, g)] = v;
    }
  }

  const GroupElement t = generator_t(spec);
  const std::array<GroupElement, 3> connection = {
      t, multiply(spec, t, generator_x(spec)),
      multiply(spec, t, generator_y(spec))};
  std::vector<std::array<Vertex, 3>> by_color(p.order());
  for (Vertex v = 0; v < p.order(); ++v) {
    for (int c = 0; c < 3; ++c) {
      const GroupElement h = multiply(spec, element_of_vertex[v], connection[c]);
      by_color[v][c] = vertex_of_element[element_index(spec, h)];
    }
  }

  ColoredHtg colored(p, std::move(by_color), std::move(element_of_vertex));
  const Graph combinatorial =
      build_graph(p.order(), construction_edges(m, n, p.ell()));
  if (!(combinatorial == colored.graph())) {
    throw std::logic_error("construction and Cayley edge sets differ for " +
                           p.to_string());
  }
  return colored;
}

int girth_by_parameters(const HtgParams& raw) {
  const HtgParams p = normal_form(raw);
  const int m = p.m();
  const int n = p.n();
  const int ell = p.ell();
  const bool girth_four =
      n == 4 || (m == 1 && n >= 6 && ell == 3) ||
      (m == 1 && n >= 6 && n % 4 == 2 && ell == n / 2) ||
      (m == 1 && n >= 8 && n % 4 == 0 && ell == (n - 2) / 2) ||
      (m == 2 && n >= 6 && (ell == 0 || ell == 2));
  return girth_four ? 4 : 6;
}

ColorCycleLengths color_cycle_lengths(const HtgParams& p) {
  const int m = p.m();
  const int n = p.n();
  const int mn = m * n;
  ColorCycleLengths lengths;
  lengths.red_blue = n;
  lengths.red_green = 2 * mn / std::gcd(n, p.ell() + m);
  lengths.blue_green = 2 * mn / std::gcd(n, ((p.ell() - m) % n + n) % n);
  return lengths;
}

}  // namespace htg
