#pragma once

#include <array>
#include <optional>
#include <string>

#include "htg/colored_htg.hpp"
#include "htg/named_graphs.hpp"
#include "htg/params.hpp"
#include "htg/perm_group.hpp"

namespace htg {

enum class Condition { C1, C2, C3, C4 };

/// Arithmetic conditions on (m, n, ell) deciding which permutations of
/// {t, tx, ty} extend to automorphisms of G:
///   c1: gcd(n, ell+m) = 2m and 2mn | ell^2 + 2m*ell - 3m^2  (fix t, swap tx/ty)
///   c2: gcd(n, ell-m) = 2m and 2mn | ell^2 - 2m*ell - 3m^2  (fix tx, swap t/ty)
///   c3: ell in {0, n/2}                                     (fix ty, swap t/tx)
///   c4: both gcds = 2m and 2mn | ell^2 + 3m^2               (3-cycle)
/// ell is used as given; gcd(n, ell-m) is taken on (ell-m) mod n.
bool condition(const HtgParams& p, Condition which);

struct ConditionFlags {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;

  int count() const { return c1 + c2 + c3 + c4; }
  /// Either none, exactly one, or all four hold.
  bool consistent() const { return count() <= 1 || count() == 4; }
  bool operator==(const ConditionFlags&) const = default;
};

ConditionFlags condition_flags(const HtgParams& p);

enum class ColorGroup { Trivial, SwapFixRed, SwapFixBlue, SwapFixGreen, Cyclic3, Sym3 };

std::string color_group_name(ColorGroup g);

/// The subgroup of S3 on {red, blue, green} realized by Aut(G; {t,tx,ty}).
/// Any two conditions already generate Sym3.
ColorGroup color_aut_subgroup(const HtgParams& p);

/// Color permutation: sigma[c] is the image color of c.
using ColorPermutation = std::array<Color, 3>;

inline constexpr ColorPermutation kIdentityColors = {Color::Red, Color::Blue,
                                                     Color::Green};

/// Whether sigma lies in the subgroup given by the conditions.
bool color_permutation_allowed(const HtgParams& p, const ColorPermutation& sigma);

/// Vertex permutation of build_htg(p) that fixes the identity vertex and maps
/// color c onto sigma[c], when the conditions allow sigma. It is the group
/// automorphism t -> phi(t), x -> phi(t)phi(tx), y -> phi(t)phi(ty) applied to
/// canonical forms. Throws std::logic_error if the constructed map is not a
/// color-respecting graph automorphism.
std::optional<Permutation> color_automorphism(const ColoredHtg& graph,
                                              const ColorPermutation& sigma);
std::optional<Permutation> color_automorphism(const HtgParams& p,
                                              const ColorPermutation& sigma);

/// The map above built unconditionally (no condition check, no verification).
Permutation candidate_color_map(const ColoredHtg& graph, const ColorPermutation& sigma);

/// True if p maps every color class onto a color class.
bool is_color_permuting(const ColoredHtg& graph, const Permutation& p);

enum class Category { Exceptional, TwoArcRegular, OneArcRegular, StabilizerTwo, RegularAut };

std::string category_name(Category c);

struct ClassificationResult {
  HtgParams params;  // normal form
  int girth = 6;
  Category category = Category::RegularAut;
  std::optional<ExceptionalId> exceptional{};
  ConditionFlags flags{};
  BigInt predicted_aut_order = 0;
  BigInt predicted_stabilizer = 0;
  bool is_normal_cayley = true;
  /// Largest s with Aut transitive on s-arcs (0: not arc-transitive).
  int s_transitive_up_to = 0;
  std::optional<int> s_regular_at{};

  std::string label() const;  // category name, or the exceptional graph's name
};

/// Pure parameter arithmetic; never builds the graph. Throws on invalid
/// parameters.
ClassificationResult classify(const HtgParams& raw);

}  // namespace htg
