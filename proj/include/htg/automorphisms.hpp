#pragma once

#include <optional>
#include <vector>

#include "htg/graph.hpp"
#include "htg/partition.hpp"
#include "htg/perm_group.hpp"

namespace htg {

inline constexpr int kMaxOracleOrder = 500;

/// Full automorphism group of g, found by individualization-refinement
/// backtracking along a first path of the search tree. The basic orbits are
/// computed exactly by searching every candidate image, and the resulting
/// generators are passed through Schreier-Sims with the same base; the two
/// orders must agree. Throws HtgError(TooLarge) above kMaxOracleOrder.
PermGroup automorphisms(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Some isomorphism g1 -> g2 as a vertex map, if one exists.
std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2);

bool are_isomorphic(const Graph& g1, const Graph& g2);

struct SArcReport {
  /// Largest s such that Aut acts transitively on s-arcs; 0 when the graph is
  /// not arc-transitive.
  int s_transitive_up_to = 0;
  /// s at which the action on s-arcs is regular, if any.
  std::optional<int> regular_at;
  BigInt vertex_stabilizer_order = 1;
};

/// `group` must be Aut(g) (or a subgroup, in which case the report describes
/// that subgroup). Throws HtgError(NotCubic).
SArcReport s_arc_regularity(const Graph& g, const PermGroup& group);

}  // namespace htg
