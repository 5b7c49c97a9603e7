#include "htg/classifier.hpp"

#include <numeric>
#include <stdexcept>

#include "htg/automorphisms.hpp"
#include "htg/htg.hpp"

namespace htg {

namespace {

bool divides(long long d, long long value) { return value % d == 0; }

GroupElement generator_of(const GroupSpec& spec, Color c) {
  const GroupElement t = generator_t(spec);
  switch (c) {
    case Color::Red: return t;
    case Color::Blue: return multiply(spec, t, generator_x(spec));
    case Color::Green: return multiply(spec, t, generator_y(spec));
  }
  return t;
}

bool is_color_permutation(const ColorPermutation& sigma) {
  int seen = 0;
  for (Color c : sigma) seen |= 1 << static_cast<int>(c);
  return seen == 0b111;
}

}  // namespace

bool condition(const HtgParams& p, Condition which) {
  const long long m = p.m();
  const long long n = p.n();
  const long long ell = p.ell();
  const long long two_mn = 2 * m * n;
  const long long gcd_plus = std::gcd(n, ell + m);
  const long long gcd_minus = std::gcd(n, ((ell - m) % n + n) % n);
  switch (which) {
    case Condition::C1:
      return gcd_plus == 2 * m && divides(two_mn, ell * ell + 2 * m * ell - 3 * m * m);
    case Condition::C2:
      return gcd_minus == 2 * m && divides(two_mn, ell * ell - 2 * m * ell - 3 * m * m);
    case Condition::C3:
      return ell == 0 || 2 * ell == n;
    case Condition::C4:
      return gcd_plus == 2 * m && gcd_minus == 2 * m &&
             divides(two_mn, ell * ell + 3 * m * m);
  }
  return false;
}

ConditionFlags condition_flags(const HtgParams& p) {
  return {condition(p, Condition::C1), condition(p, Condition::C2),
          condition(p, Condition::C3), condition(p, Condition::C4)};
}

std::string color_group_name(ColorGroup g) {
  switch (g) {
    case ColorGroup::Trivial: return "Trivial";
    case ColorGroup::SwapFixRed: return "SwapFixRed";
    case ColorGroup::SwapFixBlue: return "SwapFixBlue";
    case ColorGroup::SwapFixGreen: return "SwapFixGreen";
    case ColorGroup::Cyclic3: return "Cyclic3";
    case ColorGroup::Sym3: return "Sym3";
  }
  return "?";
}

ColorGroup color_aut_subgroup(const HtgParams& p) {
  const ConditionFlags f = condition_flags(p);
  // Two distinct nontrivial elements of a subgroup of S3 generate S3.
  if (f.count() >= 2) return ColorGroup::Sym3;
  if (f.c1) return ColorGroup::SwapFixRed;
  if (f.c2) return ColorGroup::SwapFixBlue;
  if (f.c3) return ColorGroup::SwapFixGreen;
  if (f.c4) return ColorGroup::Cyclic3;
  return ColorGroup::Trivial;
}

bool color_permutation_allowed(const HtgParams& p, const ColorPermutation& sigma) {
  if (!is_color_permutation(sigma)) return false;
  int fixed = 0;
  Color fixed_color = Color::Red;
  for (Color c : kColors) {
    if (sigma[static_cast<int>(c)] == c) {
      ++fixed;
      fixed_color = c;
    }
  }
  if (fixed == 3) return true;
  if (fixed == 0) return condition(p, Condition::C4);
  switch (fixed_color) {
    case Color::Red: return condition(p, Condition::C1);
    case Color::Blue: return condition(p, Condition::C2);
    case Color::Green: return condition(p, Condition::C3);
  }
  return false;
}

Permutation candidate_color_map(const ColoredHtg& graph, const ColorPermutation& sigma) {
  const GroupSpec& spec = graph.group();
  const GroupElement t_image = generator_of(spec, sigma[0]);
  const GroupElement x_image = multiply(spec, t_image, generator_of(spec, sigma[1]));
  const GroupElement y_image = multiply(spec, t_image, generator_of(spec, sigma[2]));

  std::vector<Vertex> images(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) {
    const GroupElement& g = graph.element_of(v);
    GroupElement image = multiply(spec, power(spec, x_image, g.j), power(spec, y_image, g.i));
    if (g.eps) image = multiply(spec, image, t_image);
    images[v] = graph.vertex_of(image);
  }
  // Not necessarily a bijection when sigma does not extend to G; the caller
  // gets a BadParameter error from Permutation in that case.
  return Permutation(std::move(images));
}

std::optional<Permutation> color_automorphism(const ColoredHtg& graph,
                                              const ColorPermutation& sigma) {
  if (!color_permutation_allowed(graph.params(), sigma)) return std::nullopt;
  Permutation map = candidate_color_map(graph, sigma);
  for (Vertex v = 0; v < graph.order(); ++v) {
    for (Color c : kColors) {
      if (graph.neighbor(map[v], sigma[static_cast<int>(c)]) != map[graph.neighbor(v, c)]) {
        throw std::logic_error("color automorphism does not respect colors for " +
                               graph.params().to_string());
      }
    }
  }
  if (map[graph.vertex_of(identity_element())] != graph.vertex_of(identity_element())) {
    throw std::logic_error("color automorphism moves the identity vertex");
  }
  return map;
}

std::optional<Permutation> color_automorphism(const HtgParams& p,
                                              const ColorPermutation& sigma) {
  if (!color_permutation_allowed(p, sigma)) return std::nullopt;
  return color_automorphism(build_htg(p), sigma);
}

bool is_color_permuting(const ColoredHtg& graph, const Permutation& p) {
  // The image color of each class is read off one edge and checked on all.
  std::array<int, 3> image{-1, -1, -1};
  for (Vertex v = 0; v < graph.order(); ++v) {
    for (Color c : kColors) {
      const int target = static_cast<int>(
          graph.color_of_edge(p[v], p[graph.neighbor(v, c)]));
      int& slot = image[static_cast<int>(c)];
      if (slot < 0) slot = target;
      if (slot != target) return false;
    }
  }
  return image[0] != image[1] && image[1] != image[2] && image[0] != image[2];
}

std::string category_name(Category c) {
  switch (c) {
    case Category::Exceptional: return "Exceptional";
    case Category::TwoArcRegular: return "TwoArcRegular";
    case Category::OneArcRegular: return "OneArcRegular";
    case Category::StabilizerTwo: return "StabilizerTwo";
    case Category::RegularAut: return "RegularAut";
  }
  return "?";
}

std::string ClassificationResult::label() const {
  if (exceptional) return exceptional->name();
  return category_name(category);
}

ClassificationResult classify(const HtgParams& raw) {
  const HtgParams p = normal_form(raw);
  ClassificationResult result{.params = p};
  result.girth = girth_by_parameters(p);
  result.flags = condition_flags(p);
  const ColorGroup colors = color_aut_subgroup(p);

  const BigInt order = p.order();
  if (auto ex = recognize_exceptional(p)) {
    result.category = Category::Exceptional;
    result.exceptional = ex;
    result.predicted_stabilizer = ex->stabilizer_order;
    // G collapses to Z2^3 for (2,4,2), and then Aut(cube)_1 = S3 = Aut(G;S).
    result.is_normal_cayley = p.m() == 2 && p.n() == 4 && p.ell() == 2;
    result.s_transitive_up_to = ex->s_arc_regular.value_or(0);
    result.s_regular_at = ex->s_arc_regular;
  } else {
    switch (colors) {
      case ColorGroup::Sym3:
        result.category = Category::TwoArcRegular;
        result.predicted_stabilizer = 6;
        result.s_transitive_up_to = 2;
        result.s_regular_at = 2;
        break;
      case ColorGroup::Cyclic3:
        result.category = Category::OneArcRegular;
        result.predicted_stabilizer = 3;
        result.s_transitive_up_to = 1;
        result.s_regular_at = 1;
        break;
      case ColorGroup::SwapFixRed:
      case ColorGroup::SwapFixBlue:
      case ColorGroup::SwapFixGreen:
        result.category = Category::StabilizerTwo;
        result.predicted_stabilizer = 2;
        break;
      case ColorGroup::Trivial:
        result.category = Category::RegularAut;
        result.predicted_stabilizer = 1;
        break;
    }
    result.is_normal_cayley = true;
  }
  result.predicted_aut_order = order * result.predicted_stabilizer;
  return result;
}

}  // namespace htg
