#include "htg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "htg/errors.hpp"

namespace htg {

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(int order, std::span<const Edge> edges) {
  if (order < 0) {
    throw HtgError(Errc::IndexOutOfRange, "negative order");
  }
  Graph g;
  g.adjacency_.assign(order, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw HtgError(Errc::IndexOutOfRange,
                     "edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} outside 0.." +
                         std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw HtgError(Errc::SelfLoop, "loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw HtgError(Errc::DuplicateEdge, "edge {" + std::to_string(v) + "," +
                                              std::to_string(*dup) +
                                              "} given twice");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> touched;
  std::queue<Vertex> queue;

  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : touched) dist[v] = -1;
    touched.clear();
    dist[root] = 0;
    parent[root] = -1;
    touched.push_back(root);
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      // Any cycle found from here on is at least 2*dist[x]+1 long.
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    queue = {};
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

StructuralProfile structural_profile(const Graph& g) {
  StructuralProfile profile;
  const int n = g.order();

  profile.is_cubic = n > 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      profile.is_cubic = false;
      break;
    }
  }

  // One BFS per component; the 2-coloring doubles as the reachability scan.
  std::vector<int> side(n, -1);
  int components = 0;
  profile.is_bipartite = true;
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    ++components;
    side[start] = 0;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push(y);
        } else if (side[y] == side[x]) {
          profile.is_bipartite = false;
        }
      }
    }
  }
  profile.is_connected = components <= 1;
  return profile;
}

namespace {

// Rotation/reflection-invariant representative of a closed vertex sequence.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  const std::size_t start = static_cast<std::size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::vector<Vertex> forward(len), backward(len);
  for (std::size_t k = 0; k < len; ++k) {
    forward[k] = cycle[(start + k) % len];
    backward[k] = cycle[(start + len - k) % len];
  }
  return std::min(forward, backward);
}

}  // namespace

std::size_t cycles_through_edge(const Graph& g, Edge e, int length) {
  if (!g.has_edge(e.u, e.v)) {
    throw HtgError(Errc::NotAnEdge, "{" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
  }
  if (length < 3 || length > kMaxCycleLength) {
    throw HtgError(Errc::BadParameter,
                   "cycle length must be in 3.." +
                       std::to_string(kMaxCycleLength));
  }

  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> path{e.u, e.v};
  std::vector<char> on_path(g.order(), 0);
  on_path[e.u] = on_path[e.v] = 1;

  // Extend u,v,... by simple paths; close back to u after `length` vertices.
  auto extend = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.has_edge(tail, e.u)) found.insert(canonical_cycle(path));
      return;
    }
    for (Vertex next : g.neighbors(tail)) {
      if (on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self);
      path.pop_back();
      on_path[next] = 0;
    }
  };
  extend(extend);
  return found.size();
}

}  // namespace htg
