#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "htg/params.hpp"

namespace htg {

// Generalized dihedral group
//   G = < t, x, y | t^2, x^(n/2), y^m = x^((ell+m)/2), txt = x^-1, tyt = y^-1,
//         xy = yx >
// of order m*n. Every element has a unique canonical form x^j y^i t^eps with
// 0 <= j < n/2, 0 <= i < m, eps in {0,1}; the relation y^m = x^carry is used to
// keep the y-exponent in range.
struct GroupSpec {
  int m = 1;
  int half_n = 2;
  int carry = 0;

  int n() const { return 2 * half_n; }
  int order() const { return m * n(); }
  /// The unique ell in 0..n-1 with (ell + m)/2 = carry (mod n/2).
  int ell() const;

  auto operator<=>(const GroupSpec&) const = default;
};

struct GroupElement {
  int j = 0;    // exponent of x, 0..half_n-1
  int i = 0;    // exponent of y, 0..m-1
  int eps = 0;  // exponent of t, 0 or 1

  std::string to_string() const;

  auto operator<=>(const GroupElement&) const = default;
};

GroupSpec group_spec(const HtgParams& p);

/// Parameters of the HTG graph this group defines; throws when the group
/// corresponds to a degenerate triple.
HtgParams params_of(const GroupSpec& spec);

inline GroupElement identity_element() { return {}; }
GroupElement generator_t(const GroupSpec& spec);
GroupElement generator_x(const GroupSpec& spec);
GroupElement generator_y(const GroupSpec& spec);

/// Canonical form of x^j y^i t^eps for arbitrary integer exponents.
GroupElement make_element(const GroupSpec& spec, long long j, long long i,
                          int eps);

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b);
GroupElement inverse(const GroupSpec& spec, const GroupElement& a);
GroupElement power(const GroupSpec& spec, const GroupElement& a, long long k);

/// Least k >= 1 with a^k = 1.
int element_order(const GroupSpec& spec, const GroupElement& a);

/// Dense index in 0..order-1; inverse of element_at.
std::size_t element_index(const GroupSpec& spec, const GroupElement& a);
GroupElement element_at(const GroupSpec& spec, std::size_t index);

std::vector<GroupElement> all_elements(const GroupSpec& spec);

class ColoredHtg;

/// Cay(G; {t, tx, ty}) with vertex k = element_at(spec, k); the edges
/// {g, gt}, {g, gtx}, {g, gty} are colored red, blue and green.
ColoredHtg cayley_colored_graph(const GroupSpec& spec);

}  // namespace htg
