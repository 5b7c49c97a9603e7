#include <gtest/gtest.h>

#include <chrono>
#include <set>
#include <tuple>

#include "htg/automorphisms.hpp"
#include "htg/classifier.hpp"
#include "htg/htg.hpp"
#include "test_support.hpp"

namespace htg {
namespace {

HtgParams P(int m, int n, int ell) { return validate_params(m, n, ell); }

TEST(Conditions, Examples) {
  EXPECT_TRUE(condition(P(1, 10, 3), Condition::C2));
  EXPECT_TRUE(condition(P(2, 6, 0), Condition::C3));
  EXPECT_TRUE(condition(P(1, 26, 7), Condition::C4));
  EXPECT_EQ(condition_flags(P(1, 26, 7)), (ConditionFlags{false, false, false, true}));
  EXPECT_EQ(condition_flags(P(1, 18, 5)), (ConditionFlags{}));
  EXPECT_EQ(condition_flags(P(4, 8, 4)), (ConditionFlags{true, true, true, true}));
}

TEST(ColorGroup, Examples) {
  EXPECT_EQ(color_aut_subgroup(P(4, 8, 4)), ColorGroup::Sym3);
  EXPECT_EQ(color_aut_subgroup(P(1, 26, 7)), ColorGroup::Cyclic3);
  EXPECT_EQ(color_aut_subgroup(P(1, 18, 5)), ColorGroup::Trivial);
  EXPECT_EQ(color_aut_subgroup(P(1, 10, 3)), ColorGroup::SwapFixBlue);
  EXPECT_EQ(color_aut_subgroup(P(2, 6, 0)), ColorGroup::SwapFixGreen);
}

// Any two flags force all four, and the all-four triples in normal form are
// (m,2m,m) for m >= 2 and (m,6m,3m) for m >= 1.
TEST(Conditions, FlagLogicSweep) {
  const auto start = std::chrono::steady_clock::now();
  std::set<std::tuple<int, int, int>> all_four;
  for (int m = 1; 4 * m <= 2000; ++m) {
    for (int n = 4; m * n <= 2000; n += 2) {
      for (int ell = m % 2; 2 * ell <= n; ell += 2) {
        if (m == 1 && ell == 1) continue;
        const ConditionFlags f = condition_flags(P(m, n, ell));
        EXPECT_TRUE(f.consistent()) << m << ',' << n << ',' << ell;
        if (f.count() == 4) all_four.emplace(m, n, ell);
      }
    }
  }
  std::set<std::tuple<int, int, int>> expected;
  for (int m = 2; m * 2 * m <= 2000; ++m) expected.emplace(m, 2 * m, m);
  for (int m = 1; m * 6 * m <= 2000; ++m) expected.emplace(m, 6 * m, 3 * m);
  EXPECT_EQ(all_four, expected);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(ColorAutomorphism, SwapBlueGreen) {
  const ColoredHtg c = build_htg(P(4, 8, 4));
  const ColorPermutation swap{Color::Red, Color::Green, Color::Blue};
  const auto a = color_automorphism(c, swap);
  ASSERT_TRUE(a.has_value());
  const GroupSpec& s = c.group();
  const GroupElement t = generator_t(s);
  EXPECT_EQ((*a)[c.vertex_of(identity_element())], c.vertex_of(identity_element()));
  EXPECT_EQ((*a)[c.vertex_of(t)], c.vertex_of(t));
  EXPECT_EQ((*a)[c.vertex_of(multiply(s, t, generator_x(s)))],
            c.vertex_of(multiply(s, t, generator_y(s))));
  EXPECT_TRUE(a->then(*a).is_identity());
  EXPECT_TRUE(is_automorphism(c.graph(), *a));
}

TEST(ColorAutomorphism, AbsentWhenConditionsFail) {
  const ColoredHtg c = build_htg(P(1, 18, 5));
  for (const ColorPermutation& sigma :
       {ColorPermutation{Color::Red, Color::Green, Color::Blue},
        ColorPermutation{Color::Green, Color::Blue, Color::Red},
        ColorPermutation{Color::Blue, Color::Green, Color::Red},
        ColorPermutation{Color::Blue, Color::Red, Color::Green},
        ColorPermutation{Color::Green, Color::Red, Color::Blue}}) {
    EXPECT_FALSE(color_automorphism(c, sigma).has_value());
  }
  EXPECT_TRUE(color_automorphism(c, kIdentityColors)->is_identity());
}

std::vector<ColorPermutation> all_color_permutations() {
  std::vector<ColorPermutation> out;
  ColorPermutation sigma = kIdentityColors;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// The candidate map is an automorphism exactly when the condition holds.
TEST(ColorAutomorphism, ExistenceMatchesConditions) {
  for (const HtgParams& p : testing::all_valid_triples(120)) {
    const ColoredHtg c = build_htg(p);
    for (const ColorPermutation& sigma : all_color_permutations()) {
      bool realized = false;
      try {
        const Permutation map = candidate_color_map(c, sigma);
        realized = is_automorphism(c.graph(), map);
        if (realized) {
          for (Vertex v = 0; v < c.order(); ++v) {
            for (Color col : kColors) {
              ASSERT_EQ(c.color_of_edge(map[v], map[c.neighbor(v, col)]),
                        sigma[static_cast<int>(col)]);
            }
          }
        }
      } catch (const HtgError&) {
      }
      EXPECT_EQ(realized, color_permutation_allowed(p, sigma)) << p.to_string();
      const auto a = color_automorphism(c, sigma);
      EXPECT_EQ(a.has_value(), realized);
      if (a) {
        const bool three_cycle = sigma[0] != Color::Red && sigma[1] != Color::Blue &&
                                 sigma[2] != Color::Green;
        const Permutation cube = a->then(*a).then(*a);
        const Permutation square = a->then(*a);
        if (three_cycle) EXPECT_TRUE(cube.is_identity());
        else EXPECT_TRUE(square.is_identity());
      }
    }
  }
}

TEST(Classify, Examples) {
  const ClassificationResult heawood = classify(P(1, 14, 5));
  EXPECT_EQ(heawood.category, Category::Exceptional);
  EXPECT_EQ(heawood.label(), "Heawood");
  EXPECT_EQ(heawood.predicted_aut_order, 336);
  EXPECT_FALSE(heawood.is_normal_cayley);

  const ClassificationResult two = classify(P(2, 12, 6));
  EXPECT_EQ(two.category, Category::TwoArcRegular);
  EXPECT_EQ(two.predicted_aut_order, 144);

  const ClassificationResult one = classify(P(1, 26, 7));
  EXPECT_EQ(one.category, Category::OneArcRegular);
  EXPECT_EQ(one.predicted_aut_order, 78);

  const ClassificationResult regular = classify(P(1, 18, 5));
  EXPECT_EQ(regular.category, Category::RegularAut);
  EXPECT_EQ(regular.predicted_aut_order, 18);
}

TEST(Classify, NormalizesFirst) {
  const ClassificationResult c = classify(P(1, 14, 9));
  EXPECT_EQ(c.params, P(1, 14, 5));
  EXPECT_EQ(c.label(), "Heawood");
}

TEST(Classify, NonExceptionalInvariants) {
  for (const HtgParams& p : testing::all_valid_triples(400)) {
    const ClassificationResult c = classify(p);
    EXPECT_EQ(c.girth, girth_by_parameters(c.params));
    if (c.category == Category::Exceptional) continue;
    EXPECT_TRUE(c.is_normal_cayley);
    EXPECT_EQ(c.predicted_aut_order, c.predicted_stabilizer * p.order());
    const int stab = static_cast<int>(c.predicted_stabilizer);
    const int expected = c.category == Category::TwoArcRegular   ? 6
                         : c.category == Category::OneArcRegular ? 3
                         : c.category == Category::StabilizerTwo ? 2
                                                                 : 1;
    EXPECT_EQ(stab, expected);
  }
}

// (2,n,0) is a prism and (1,2n,n) with n odd a Moebius ladder; both have
// vertex stabilizers of order 2.
TEST(Classify, PrismAndLadderFamilies) {
  for (int n = 6; n <= 40; n += 2) {
    const HtgParams p = P(2, n, 0);
    EXPECT_EQ(classify(p).category, Category::StabilizerTwo) << p.to_string();
    EXPECT_EQ(automorphisms(build_htg(p).graph()).order(), 4 * n);
  }
  for (int n = 5; n <= 25; n += 2) {
    const HtgParams p = P(1, 2 * n, n);
    EXPECT_EQ(classify(p).category, Category::StabilizerTwo) << p.to_string();
    EXPECT_EQ(automorphisms(build_htg(p).graph()).order(), 4 * n);
  }
}

}  // namespace
}  // namespace htg
