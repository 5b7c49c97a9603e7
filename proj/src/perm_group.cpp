#include "htg/perm_group.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "htg/errors.hpp"

namespace htg {

Permutation::Permutation(int degree) : images_(degree) {
  for (Vertex v = 0; v < degree; ++v) images_[v] = v;
}

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Vertex image : images_) {
    if (image < 0 || image >= degree() || seen[image]) {
      throw HtgError(Errc::BadParameter, "image list is not a bijection");
    }
    seen[image] = 1;
  }
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < degree(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (Vertex v = 0; v < degree(); ++v) inv.images_[images_[v]] = v;
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (Vertex v = 0; v < degree(); ++v) out.images_[v] = next.images_[images_[v]];
  return out;
}

Vertex Permutation::first_moved_point() const {
  for (Vertex v = 0; v < degree(); ++v) {
    if (images_[v] != v) return v;
  }
  return -1;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  for (Vertex start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    for (Vertex v = start; !done[v]; v = images_[v]) {
      done[v] = 1;
      if (v != start) out << ' ';
      out << v;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Vertex> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw HtgError(Errc::BadParameter, "generator degree mismatch");
    }
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (Vertex b : base_prefix) {
    if (b < 0 || b >= degree) throw HtgError(Errc::IndexOutOfRange, "base point");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
  }
  strong_ = generators_;
  for (const auto& s : strong_) {
    const bool fixes_base = std::all_of(base_.begin(), base_.end(),
                                        [&](Vertex b) { return s[b] == b; });
    if (fixes_base) base_.push_back(s.first_moved_point());
  }

  levels_.resize(base_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);

  // Deterministic Schreier-Sims: every Schreier generator of level i must
  // sift through levels i+1.. to the identity.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level = i - 1;
    bool extended = false;
    const Level& lv = levels_[level];
    for (std::size_t k = 0; !extended && k < lv.orbit.size(); ++k) {
      const Vertex p = lv.orbit[k];
      for (const Permutation& s : lv.generators) {
        const Vertex q = s[p];
        Permutation schreier = lv.transversal[lv.slot[p]].then(s).then(
            lv.transversal_inverse[lv.slot[q]]);
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(std::move(schreier), level + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;

        if (stop == levels_.size()) {
          base_.push_back(residue.first_moved_point());
          levels_.emplace_back();
        }
        strong_.push_back(std::move(residue));
        for (std::size_t l = level + 1; l <= stop; ++l) rebuild_level(l);
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void PermGroup::rebuild_level(std::size_t level) {
  Level& lv = levels_[level];
  lv.point = base_[level];
  lv.generators.clear();
  for (const auto& s : strong_) {
    bool fixes_prefix = true;
    for (std::size_t k = 0; k < level && fixes_prefix; ++k) {
      fixes_prefix = s[base_[k]] == base_[k];
    }
    if (fixes_prefix) lv.generators.push_back(s);
  }

  lv.orbit.assign(1, lv.point);
  lv.slot.assign(degree_, -1);
  lv.transversal.assign(1, Permutation(degree_));
  lv.transversal_inverse.assign(1, Permutation(degree_));
  lv.slot[lv.point] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Vertex p = lv.orbit[k];
    for (const auto& s : lv.generators) {
      const Vertex q = s[p];
      if (lv.slot[q] >= 0) continue;
      lv.slot[q] = static_cast<int>(lv.transversal.size());
      lv.orbit.push_back(q);
      Permutation u = lv.transversal[lv.slot[p]].then(s);
      lv.transversal_inverse.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g,
                                                     std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const Vertex beta = g[lv.point];
    if (lv.slot[beta] < 0) return {std::move(g), l};
    g = g.then(lv.transversal_inverse[lv.slot[beta]]);
  }
  return {std::move(g), levels_.size()};
}

const Permutation& PermGroup::transversal(std::size_t level,
                                          Vertex point) const {
  const Level& lv = levels_.at(level);
  if (point < 0 || point >= degree_ || lv.slot[point] < 0) {
    throw HtgError(Errc::IndexOutOfRange, "point not in basic orbit");
  }
  return lv.transversal[lv.slot[point]];
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& lv : levels_) result *= lv.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = strip(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Vertex> PermGroup::orbit(Vertex v) const {
  std::vector<char> seen(degree_, 0);
  std::vector<Vertex> out{v};
  seen[v] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      const Vertex w = g[out[k]];
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt group_order(const PermGroup& group) { return group.order(); }

BigInt point_stabilizer_order(const PermGroup& group, Vertex v) {
  return group.order() / group.orbit(v).size();
}

}  // namespace htg
