#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "htg/graph.hpp"

namespace htg {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection on 0..degree-1.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(int degree);
  /// Throws HtgError(BadParameter) unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator[](Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Composition applying *this first and `next` second.
  Permutation then(const Permutation& next) const;
  /// Smallest moved point, or -1 for the identity.
  Vertex first_moved_point() const;

  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Permutation group with a base and strong generating set computed by the
/// deterministic Schreier-Sims algorithm.
class PermGroup {
 public:
  /// The base starts with `base_prefix` (duplicates dropped) and is extended
  /// as needed. Generators must all have the given degree.
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<Vertex> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Vertex>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  std::size_t levels() const { return levels_.size(); }
  /// Orbit of base()[level] under the pointwise stabilizer of the earlier
  /// base points.
  const std::vector<Vertex>& basic_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  /// An element of that stabilizer mapping base()[level] to `point`.
  const Permutation& transversal(std::size_t level, Vertex point) const;

  /// Product of the basic orbit lengths.
  BigInt order() const;
  bool contains(const Permutation& p) const;

  /// Orbit of v under the generators, sorted.
  std::vector<Vertex> orbit(Vertex v) const;

 private:
  struct Level {
    Vertex point = 0;
    std::vector<Permutation> generators;
    std::vector<Vertex> orbit;
    std::vector<int> slot;  // per point: index into transversal, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;
  };

  void rebuild_level(std::size_t level);
  // Sifts from `level` down; returns the residue and the level where sifting
  // stopped (levels() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t level) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Vertex> base_;
  std::vector<Level> levels_;
};

BigInt group_order(const PermGroup& group);

/// |G| / |v^G|.
BigInt point_stabilizer_order(const PermGroup& group, Vertex v);

}  // namespace htg
