#include "htg/automorphisms.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "htg/errors.hpp"

namespace htg {

namespace {

void check_size(const Graph& g) {
  if (g.order() > kMaxOracleOrder) {
    throw HtgError(Errc::TooLarge, std::to_string(g.order()) + " vertices (limit " +
                                       std::to_string(kMaxOracleOrder) + ")");
  }
}

// Smallest non-singleton cell, earliest position first.
int target_cell(const Partition& p) {
  int best = -1;
  int best_size = 0;
  for (int k = 0; k < p.size(); k = p.end_of_cell(k)) {
    const int size = p.end_of_cell(k) - k;
    if (size > 1 && (best < 0 || size < best_size)) {
      best = k;
      best_size = size;
    }
  }
  return best;
}

Vertex min_vertex(std::span<const Vertex> cell) {
  return *std::min_element(cell.begin(), cell.end());
}

Partition individualized(const Graph& g, Partition p, Vertex v) {
  const int start = p.individualize(v);
  refine_in_place(g, p, {start});
  return p;
}

bool maps_edges(const Graph& from, const Graph& to, const Permutation& p) {
  for (Vertex u = 0; u < from.order(); ++u) {
    for (Vertex w : from.neighbors(u)) {
      if (u < w && !to.has_edge(p[u], p[w])) return false;
    }
  }
  return true;
}

// Backtracking search for an isomorphism left -> right that carries each cell
// of a left partition onto the cell at the same position on the right.
class Matcher {
 public:
  Matcher(const Graph& left, const Graph& right) : left_(left), right_(right) {}

  std::optional<Permutation> extend(const Partition& p,
                                    const Partition& q) const {
    if (!compatible(p, q)) return std::nullopt;
    if (p.is_discrete()) {
      std::vector<Vertex> images(p.size());
      for (int k = 0; k < p.size(); ++k) images[p.vertex_at(k)] = q.vertex_at(k);
      Permutation candidate(std::move(images));
      if (maps_edges(left_, right_, candidate)) return candidate;
      return std::nullopt;
    }

    const int cell = target_cell(p);
    const Partition next_left = individualized(left_, p, min_vertex(p.cell_at(cell)));
    auto targets = q.cell_at(cell);
    std::vector<Vertex> candidates(targets.begin(), targets.end());
    std::sort(candidates.begin(), candidates.end());
    for (Vertex v : candidates) {
      if (auto found = extend(next_left, individualized(right_, q, v))) {
        return found;
      }
    }
    return std::nullopt;
  }

 private:
  // Equal cell layout and equal neighbor-cell profile for each cell.
  bool compatible(const Partition& p, const Partition& q) const {
    if (!p.same_shape(q)) return false;
    std::vector<int> lhs, rhs;
    for (int k = 0; k < p.size(); k = p.end_of_cell(k)) {
      const Vertex a = p.vertex_at(k);
      const Vertex b = q.vertex_at(k);
      if (left_.degree(a) != right_.degree(b)) return false;
      lhs.clear();
      rhs.clear();
      for (Vertex w : left_.neighbors(a)) lhs.push_back(p.start_of(w));
      for (Vertex w : right_.neighbors(b)) rhs.push_back(q.start_of(w));
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs) return false;
    }
    return true;
  }

  const Graph& left_;
  const Graph& right_;
};

std::vector<Vertex> orbit_closure(Vertex seed, const std::vector<Permutation>& gens,
                                  std::vector<char>& in_orbit) {
  std::fill(in_orbit.begin(), in_orbit.end(), 0);
  std::vector<Vertex> orbit{seed};
  in_orbit[seed] = 1;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& g : gens) {
      const Vertex w = g[orbit[k]];
      if (!in_orbit[w]) {
        in_orbit[w] = 1;
        orbit.push_back(w);
      }
    }
  }
  return orbit;
}

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  return p.degree() == g.order() && maps_edges(g, g, p);
}

PermGroup automorphisms(const Graph& g) {
  check_size(g);
  const int n = g.order();
  if (n == 0) return PermGroup(0, {});

  // First path of the search tree; its individualized vertices form the base.
  std::vector<Partition> path{refine_partition(g, Partition::unit(n))};
  std::vector<Vertex> base;
  while (!path.back().is_discrete()) {
    const Partition& top = path.back();
    const Vertex b = min_vertex(top.cell_at(target_cell(top)));
    base.push_back(b);
    path.push_back(individualized(g, top, b));
  }

  // Deepest level first, so generators fixing more base points are available
  // for orbit pruning at shallower levels.
  const Matcher matcher(g, g);
  std::vector<Permutation> generators;
  std::vector<char> in_orbit(n, 0);
  BigInt search_order = 1;
  for (std::size_t level = base.size(); level-- > 0;) {
    const Partition& parent = path[level];
    const Vertex b = base[level];
    auto cell_span = parent.cell_at(parent.start_of(b));
    std::vector<Vertex> cell(cell_span.begin(), cell_span.end());
    std::sort(cell.begin(), cell.end());

    auto orbit = orbit_closure(b, generators, in_orbit);
    for (Vertex w : cell) {
      if (in_orbit[w]) continue;
      if (auto found = matcher.extend(path[level + 1], individualized(g, parent, w))) {
        generators.push_back(std::move(*found));
        orbit = orbit_closure(b, generators, in_orbit);
      }
    }
    search_order *= orbit.size();
  }

  for (const auto& gen : generators) {
    if (!is_automorphism(g, gen)) {
      throw std::logic_error("search produced a non-automorphism");
    }
  }
  PermGroup group(n, std::move(generators), base);
  if (group.order() != search_order) {
    throw std::logic_error("search orbit product " + search_order.str() +
                           " differs from Schreier-Sims order " +
                           group.order().str());
  }
  return group;
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2) {
  check_size(g1);
  check_size(g2);
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  std::vector<int> d1, d2;
  for (Vertex v = 0; v < g1.order(); ++v) {
    d1.push_back(g1.degree(v));
    d2.push_back(g2.degree(v));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  if (g1.order() == 0) return Permutation(0);

  const Matcher matcher(g1, g2);
  return matcher.extend(refine_partition(g1, Partition::unit(g1.order())),
                        refine_partition(g2, Partition::unit(g2.order())));
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

SArcReport s_arc_regularity(const Graph& g, const PermGroup& group) {
  check_size(g);
  const StructuralProfile profile = structural_profile(g);
  if (!profile.is_cubic) throw HtgError(Errc::NotCubic, "s-arc analysis needs a cubic graph");
  const int n = g.order();

  SArcReport report;
  const BigInt order = group.order();
  report.vertex_stabilizer_order = point_stabilizer_order(group, 0);

  // 9 bits per vertex; s+1 <= 7 vertices fit a 64-bit key.
  auto key_of = [](const std::vector<Vertex>& arc) {
    std::uint64_t key = 0;
    for (Vertex v : arc) key = (key << 9) | static_cast<std::uint64_t>(v);
    return key;
  };

  std::vector<Vertex> arc{0, g.neighbors(0)[0]};
  for (int s = 1; s <= 6; ++s) {
    if (s > 1) {
      const Vertex prev = arc[arc.size() - 2];
      for (Vertex w : g.neighbors(arc.back())) {
        if (w != prev) {
          arc.push_back(w);
          break;
        }
      }
    }
    const BigInt total = BigInt(n) * 3 * (BigInt(1) << (s - 1));

    std::unordered_set<std::uint64_t> seen{key_of(arc)};
    std::vector<std::vector<Vertex>> orbit{arc};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& gen : group.generators()) {
        std::vector<Vertex> image(orbit[k].size());
        for (std::size_t t = 0; t < image.size(); ++t) image[t] = gen[orbit[k][t]];
        if (seen.insert(key_of(image)).second) orbit.push_back(std::move(image));
      }
    }

    if (BigInt(orbit.size()) != total) break;
    report.s_transitive_up_to = s;
    if (BigInt(orbit.size()) == order) {
      report.regular_at = s;
      break;
    }
  }
  return report;
}

}  // namespace htg
