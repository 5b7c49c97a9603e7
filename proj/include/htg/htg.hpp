#pragma once

#include <vector>

#include "htg/colored_htg.hpp"
#include "htg/dihedral_group.hpp"
#include "htg/graph.hpp"
#include "htg/params.hpp"

namespace htg {

/// Raw adjacency rules on Z_m x Z_n with vertex <i,j> at index i*n + j:
/// vertical cycles <i,j> ~ <i,j+1>; <i,j> ~ <i+1,j> for i != m-1 and i, j of
/// different parity; <m-1,j> ~ <0,j+ell> for j of the same parity as m.
/// Parameters are not validated, so the list may contain loops or repeats.
std::vector<Edge> construction_edges(int m, int n, int ell);

inline Vertex htg_vertex(const HtgParams& p, int row, int column) {
  return row * p.n() + column;
}

/// HTG(m,n,ell) with the Cayley coloring transported through
/// <i,(i+2j)_n> -> x^j y^i and <i,(i+2j+1)_n> -> x^j y^i t. Throws
/// std::logic_error if the combinatorial and Cayley edge sets differ.
ColoredHtg build_htg(const HtgParams& p);

/// 4 or 6, from the parameters alone.
int girth_by_parameters(const HtgParams& p);

struct ColorCycleLengths {
  int red_blue = 0;
  int red_green = 0;
  int blue_green = 0;

  bool operator==(const ColorCycleLengths&) const = default;
};

/// Lengths of the two-colored cycles: (2|x|, 2|y|, 2|x^-1 y|).
ColorCycleLengths color_cycle_lengths(const HtgParams& p);

}  // namespace htg
