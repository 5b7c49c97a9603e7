#pragma once

#include <optional>
#include <string>

#include "htg/graph.hpp"
#include "htg/params.hpp"
#include "htg/perm_group.hpp"

namespace htg {

enum class NamedKind {
  GeneralizedPrism,  // GPr(n'), n' >= 2, order 4n'
  Wreath,            // W(n) = Cay(Z2 x Zn; {(0,+-1),(1,+-1)}), n >= 3
  Prism,             // Pr(n) = Cay(Z2 x Zn; {(1,0),(0,+-1)}), n >= 3
  MoebiusLadder,     // Ml(n) = Cay(Z2n; {+-1, n}), n >= 3
  K33,
  Cube,
  Heawood,
  Pappus,
  MoebiusKantor,
};

std::string kind_name(NamedKind kind);

/// Throws HtgError(BadParameter) for a missing or out-of-range parameter on
/// the parameterized families.
Graph named(NamedKind kind, int parameter = 0);

/// One of the graphs in the exceptional list. Apart from HTG(2,4,2) these are
/// the HTG graphs that are not normal Cayley graphs of their group G.
struct ExceptionalId {
  NamedKind kind = NamedKind::K33;
  int gpr_parameter = 0;              // n' for GPr(n'), else 0
  std::optional<int> s_arc_regular{};  // absent for GPr (not arc-transitive)
  BigInt stabilizer_order = 1;

  std::string name() const;  // "K33", "GPr(5)", ...
  Graph graph() const { return named(kind, gpr_parameter); }

  bool operator==(const ExceptionalId&) const = default;
};

/// Throws HtgError(NotNormalForm) when 2*ell > n.
std::optional<ExceptionalId> recognize_exceptional(const HtgParams& p);

}  // namespace htg
