#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "htg/graph.hpp"
#include "htg/perm_group.hpp"

namespace htg::oracle {

// Shortest cycle by enumerating every simple cycle from its least vertex.
inline std::optional<int> brute_girth(const Graph& g) {
  std::optional<int> best;
  std::vector<char> on_path(g.order(), 0);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        const int len = static_cast<int>(path.size());
        if (!best || len < *best) best = len;
      }
      if (w <= start || on_path[w]) continue;
      if (best && static_cast<int>(path.size()) + 1 >= *best) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on_path[s] = 1;
    path = {s};
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  return best;
}

// Cycles through u-v of the given length: simple paths from v back to u of
// length-1 edges that avoid the edge itself.
inline std::size_t brute_cycles_through_edge(const Graph& g, Edge e, int length) {
  std::size_t count = 0;
  std::vector<char> used(g.order(), 0);
  used[e.u] = used[e.v] = 1;
  auto dfs = [&](auto&& self, Vertex v, int steps) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == e.u) {
        if (steps + 1 == length - 1 && !(v == e.v)) ++count;
        continue;
      }
      if (used[w] || steps + 1 >= length - 1) continue;
      used[w] = 1;
      self(self, w, steps + 1);
      used[w] = 0;
    }
  };
  dfs(dfs, e.v, 0);
  return count;
}

// |Aut(g)| by filtering all order! permutations.
inline std::uint64_t brute_aut_count(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : edges) {
      if (!g.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Every element of a permutation group, from its stabilizer chain. Each
// element is s.then(u) with u a transversal element of the top level and s in
// the stabilizer.
inline std::vector<Permutation> all_elements(const PermGroup& group) {
  std::vector<Permutation> current{Permutation(group.degree())};
  for (std::size_t level = group.levels(); level-- > 0;) {
    std::vector<Permutation> next;
    for (const Permutation& s : current) {
      for (Vertex p : group.basic_orbit(level)) {
        next.push_back(s.then(group.transversal(level, p)));
      }
    }
    current = std::move(next);
  }
  return current;
}

// The group G as (a, b, e) in Z^2 x Z2 modulo the lattice spanned by
// (n/2, 0) and (-carry, m), with t acting by negation on (a, b).
struct LatticeGroup {
  long long m;
  long long half_n;
  long long carry;

  struct Element {
    long long a = 0;
    long long b = 0;
    int e = 0;
  };

  Element mul(const Element& x, const Element& y) const {
    const long long s = x.e ? -1 : 1;
    return {x.a + s * y.a, x.b + s * y.b, x.e ^ y.e};
  }

  static long long mod(long long v, long long k) { return ((v % k) + k) % k; }

  bool equal(const Element& x, const Element& y) const {
    if (x.e != y.e) return false;
    const long long da = x.a - y.a;
    const long long db = x.b - y.b;
    if (mod(db, m) != 0) return false;
    return mod(da + carry * (db / m), half_n) == 0;
  }

  bool is_identity(const Element& x) const { return equal(x, Element{}); }

  int order_of(const Element& x) const {
    Element p = x;
    int k = 1;
    while (!is_identity(p)) {
      p = mul(p, x);
      ++k;
    }
    return k;
  }
};

}  // namespace htg::oracle
