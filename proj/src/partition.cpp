#include "htg/partition.hpp"

#include <algorithm>
#include <deque>

#include "htg/errors.hpp"

namespace htg {

Partition Partition::unit(int size) {
  Partition p;
  p.lab_.resize(size);
  for (Vertex v = 0; v < size; ++v) p.lab_[v] = v;
  p.start_.assign(size, 0);
  p.end_.assign(size, -1);
  if (size > 0) {
    p.end_[0] = size;
    p.cell_count_ = 1;
  }
  return p;
}

Partition Partition::from_cells(int size,
                                const std::vector<std::vector<Vertex>>& cells) {
  Partition p;
  p.start_.assign(size, -1);
  p.end_.assign(size, -1);
  for (const auto& cell : cells) {
    if (cell.empty()) throw HtgError(Errc::BadParameter, "empty cell");
    const int start = static_cast<int>(p.lab_.size());
    for (Vertex v : cell) {
      if (v < 0 || v >= size || p.start_[v] != -1) {
        throw HtgError(Errc::BadParameter, "cells do not partition the vertex set");
      }
      p.start_[v] = start;
      p.lab_.push_back(v);
    }
    p.end_[start] = static_cast<int>(p.lab_.size());
    ++p.cell_count_;
  }
  if (static_cast<int>(p.lab_.size()) != size) {
    throw HtgError(Errc::BadParameter, "cells do not cover the vertex set");
  }
  return p;
}

int Partition::cell_of(Vertex v) const {
  int ordinal = 0;
  for (int k = 0; k < start_[v]; ++k) {
    if (end_[k] >= 0) ++ordinal;
  }
  return ordinal;
}

std::vector<std::vector<Vertex>> Partition::cells() const {
  std::vector<std::vector<Vertex>> out;
  for (int k = 0; k < size(); k = end_[k]) {
    auto cell = cell_at(k);
    out.emplace_back(cell.begin(), cell.end());
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

int Partition::individualize(Vertex v) {
  const int start = start_[v];
  const int end = end_[start];
  if (end - start == 1) return start;
  auto it = std::find(lab_.begin() + start, lab_.begin() + end, v);
  std::iter_swap(lab_.begin() + start, it);
  end_[start] = start + 1;
  end_[start + 1] = end;
  for (int k = start + 1; k < end; ++k) start_[lab_[k]] = start + 1;
  ++cell_count_;
  return start;
}

std::vector<int> Partition::split_cell(int start, std::span<const int> key) {
  const int end = end_[start];
  auto first = lab_.begin() + start;
  auto last = lab_.begin() + end;
  const int k0 = key[*first];
  if (std::all_of(first, last, [&](Vertex v) { return key[v] == k0; })) {
    return {start};
  }
  std::stable_sort(first, last,
                   [&](Vertex a, Vertex b) { return key[a] < key[b]; });

  std::vector<int> fragments{start};
  for (int k = start + 1; k < end; ++k) {
    if (key[lab_[k]] != key[lab_[k - 1]]) fragments.push_back(k);
  }
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const int a = fragments[f];
    const int b = f + 1 < fragments.size() ? fragments[f + 1] : end;
    end_[a] = b;
    for (int k = a; k < b; ++k) start_[lab_[k]] = a;
  }
  cell_count_ += static_cast<int>(fragments.size()) - 1;
  return fragments;
}

void refine_in_place(const Graph& g, Partition& p, std::vector<int> splitters) {
  const int n = g.order();
  std::vector<int> count(n, 0);
  std::vector<char> queued(n, 0);
  std::deque<int> queue;
  for (int s : splitters) {
    if (!queued[s]) {
      queued[s] = 1;
      queue.push_back(s);
    }
  }

  std::vector<Vertex> touched;
  std::vector<int> hit;
  while (!queue.empty() && !p.is_discrete()) {
    const int splitter = queue.front();
    queue.pop_front();
    queued[splitter] = 0;

    for (Vertex v : p.cell_at(splitter)) {
      for (Vertex u : g.neighbors(v)) {
        if (count[u]++ == 0) touched.push_back(u);
      }
    }
    hit.clear();
    for (Vertex u : touched) hit.push_back(p.start_of(u));
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());

    for (int cell : hit) {
      if (p.end_of_cell(cell) - cell == 1) continue;
      const auto fragments = p.split_cell(cell, count);
      if (fragments.size() == 1) continue;
      for (int f : fragments) {
        if (!queued[f]) {
          queued[f] = 1;
          queue.push_back(f);
        }
      }
    }
    for (Vertex u : touched) count[u] = 0;
    touched.clear();
  }
}

Partition refine_partition(const Graph& g, const Partition& initial) {
  if (initial.size() != g.order()) {
    throw HtgError(Errc::BadParameter, "partition size differs from graph order");
  }
  Partition p = initial;
  std::vector<int> starts;
  for (int k = 0; k < p.size(); k = p.end_of_cell(k)) starts.push_back(k);
  refine_in_place(g, p, std::move(starts));
  return p;
}

}  // namespace htg
