#pragma once

#include <span>
#include <vector>

#include "htg/graph.hpp"

namespace htg {

/// Ordered partition of 0..size-1, stored as contiguous cells of a vertex
/// array. A cell is identified by the position of its first element, so cell
/// identity never depends on vertex labels.
class Partition {
 public:
  Partition() = default;

  static Partition unit(int size);
  /// Throws HtgError(BadParameter) unless `cells` partitions 0..size-1.
  static Partition from_cells(int size,
                              const std::vector<std::vector<Vertex>>& cells);

  int size() const { return static_cast<int>(lab_.size()); }
  int cell_count() const { return cell_count_; }
  bool is_discrete() const { return cell_count_ == size(); }

  /// Ordinal of v's cell in the canonical cell order.
  int cell_of(Vertex v) const;
  /// Cells in order; vertices sorted within each cell.
  std::vector<std::vector<Vertex>> cells() const;

  // Position-level access used by the refinement engine.
  int start_of(Vertex v) const { return start_[v]; }
  int end_of_cell(int start) const { return end_[start]; }
  std::span<const Vertex> cell_at(int start) const {
    return std::span<const Vertex>(lab_).subspan(start, end_[start] - start);
  }
  Vertex vertex_at(int position) const { return lab_[position]; }

  /// Splits v's cell into {v} followed by the rest. Returns the start of {v}.
  int individualize(Vertex v);

  /// Splits the cell starting at `start` by ascending key[v]; returns the
  /// starts of the resulting fragments (the first is `start`).
  std::vector<int> split_cell(int start, std::span<const int> key);

  bool same_shape(const Partition& other) const { return end_ == other.end_; }

 private:
  std::vector<Vertex> lab_;    // vertices in cell order
  std::vector<int> start_;     // per vertex: start of its cell
  std::vector<int> end_;       // per position: cell end at a start, else -1
  int cell_count_ = 0;
};

/// Coarsest equitable refinement of `initial` (one-dimensional
/// Weisfeiler-Leman). The cell order depends only on the structure, never on
/// vertex labels.
Partition refine_partition(const Graph& g, const Partition& initial);

/// Refines `p` in place using the cells starting at `splitters` as the initial
/// splitter queue.
void refine_in_place(const Graph& g, Partition& p, std::vector<int> splitters);

}  // namespace htg
