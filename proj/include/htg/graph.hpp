#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace htg {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order-1 with sorted adjacency lists.
/// Immutable once built; construct through build_graph().
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(int order, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Throws HtgError with SelfLoop, DuplicateEdge or IndexOutOfRange.
Graph build_graph(int order, std::span<const Edge> edges);

/// Length of the shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

struct StructuralProfile {
  bool is_cubic = false;
  bool is_connected = false;
  bool is_bipartite = false;

  bool operator==(const StructuralProfile&) const = default;
};

StructuralProfile structural_profile(const Graph& g);

inline constexpr int kMaxCycleLength = 12;

/// Number of distinct (unoriented) cycles of exactly `length` edges through
/// `e`. Throws NotAnEdge if e is not an edge, BadParameter if length is
/// outside 3..kMaxCycleLength.
std::size_t cycles_through_edge(const Graph& g, Edge e, int length);

}  // namespace htg
