#include "htg/named_graphs.hpp"

#include <vector>

#include "htg/errors.hpp"

namespace htg {

namespace {

// Bipartite (7,3)-cage, LCF [5,-5]^7.
constexpr int kHeawood[][2] = {
    {0, 1},  {0, 5},   {0, 13},  {1, 2},  {1, 10},  {2, 3},   {2, 7},
    {3, 4},  {3, 12},  {4, 5},   {4, 9},  {5, 6},   {6, 7},   {6, 11},
    {7, 8},  {8, 9},   {8, 13},  {9, 10}, {10, 11}, {11, 12}, {12, 13}};

// Levi graph of the Pappus configuration, LCF [5,7,-7,7,-7,-5]^3.
constexpr int kPappus[][2] = {
    {0, 1},   {0, 5},   {0, 17},  {1, 2},   {1, 8},   {2, 3},   {2, 13},
    {3, 4},   {3, 10},  {4, 5},   {4, 15},  {5, 6},   {6, 7},   {6, 11},
    {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 16},  {10, 11}, {11, 12},
    {12, 13}, {12, 17}, {13, 14}, {14, 15}, {15, 16}, {16, 17}};

// Generalized Petersen graph GP(8,3): outer 0..7, inner 8..15.
constexpr int kMoebiusKantor[][2] = {
    {0, 1},  {0, 7},   {0, 8},   {1, 2},   {1, 9},   {2, 3},
    {2, 10}, {3, 4},   {3, 11},  {4, 5},   {4, 12},  {5, 6},
    {5, 13}, {6, 7},   {6, 14},  {7, 15},  {8, 11},  {8, 13},
    {9, 12}, {9, 14},  {10, 13}, {10, 15}, {11, 14}, {12, 15}};

// Q3 with vertices as 3-bit words.
constexpr int kCube[][2] = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                            {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};

constexpr int kK33[][2] = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                           {1, 5}, {2, 3}, {2, 4}, {2, 5}};

template <std::size_t N>
Graph literal(int order, const int (&pairs)[N][2]) {
  std::vector<Edge> edges;
  for (const auto& pair : pairs) edges.emplace_back(pair[0], pair[1]);
  return build_graph(order, edges);
}

void require(bool ok, NamedKind kind, int parameter) {
  if (!ok) {
    throw HtgError(Errc::BadParameter,
                   kind_name(kind) + " parameter " + std::to_string(parameter));
  }
}

int wrap(int value, int modulus) { return ((value % modulus) + modulus) % modulus; }

}  // namespace

std::string kind_name(NamedKind kind) {
  switch (kind) {
    case NamedKind::GeneralizedPrism: return "GPr";
    case NamedKind::Wreath: return "W";
    case NamedKind::Prism: return "Pr";
    case NamedKind::MoebiusLadder: return "Ml";
    case NamedKind::K33: return "K33";
    case NamedKind::Cube: return "Cube";
    case NamedKind::Heawood: return "Heawood";
    case NamedKind::Pappus: return "Pappus";
    case NamedKind::MoebiusKantor: return "MoebiusKantor";
  }
  return "?";
}

Graph named(NamedKind kind, int parameter) {
  std::vector<Edge> edges;
  switch (kind) {
    case NamedKind::GeneralizedPrism: {
      require(parameter >= 2, kind, parameter);
      // (i,j) -> i*2n' + j on Z2 x Z2n'.
      const int len = 2 * parameter;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < len; ++j) {
          edges.emplace_back(i * len + j, i * len + wrap(j + 1, len));
          if (j % 2 == 0) edges.emplace_back(i * len + j, (1 - i) * len + wrap(j + 1, len));
        }
      }
      return build_graph(2 * len, edges);
    }
    case NamedKind::Wreath: {
      require(parameter >= 3, kind, parameter);
      const int n = parameter;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n; ++j) {
          edges.emplace_back(i * n + j, i * n + wrap(j + 1, n));
          edges.emplace_back(i * n + j, (1 - i) * n + wrap(j + 1, n));
        }
      }
      return build_graph(2 * n, edges);
    }
    case NamedKind::Prism: {
      require(parameter >= 3, kind, parameter);
      const int n = parameter;
      for (int j = 0; j < n; ++j) {
        edges.emplace_back(j, wrap(j + 1, n));
        edges.emplace_back(n + j, n + wrap(j + 1, n));
        edges.emplace_back(j, n + j);
      }
      return build_graph(2 * n, edges);
    }
    case NamedKind::MoebiusLadder: {
      require(parameter >= 3, kind, parameter);
      const int n = parameter;
      for (int j = 0; j < 2 * n; ++j) {
        edges.emplace_back(j, wrap(j + 1, 2 * n));
        if (j < n) edges.emplace_back(j, j + n);
      }
      return build_graph(2 * n, edges);
    }
    case NamedKind::K33: return literal(6, kK33);
    case NamedKind::Cube: return literal(8, kCube);
    case NamedKind::Heawood: return literal(14, kHeawood);
    case NamedKind::Pappus: return literal(18, kPappus);
    case NamedKind::MoebiusKantor: return literal(16, kMoebiusKantor);
  }
  throw HtgError(Errc::BadParameter, "unknown graph kind");
}

std::string ExceptionalId::name() const {
  if (kind == NamedKind::GeneralizedPrism) {
    return "GPr(" + std::to_string(gpr_parameter) + ")";
  }
  return kind_name(kind);
}

std::optional<ExceptionalId> recognize_exceptional(const HtgParams& p) {
  if (!p.is_normal_form()) {
    throw HtgError(Errc::NotNormalForm, p.to_string() + " has ell > n/2");
  }
  const int m = p.m();
  const int n = p.n();
  const int ell = p.ell();
  auto sporadic = [](NamedKind kind, int s, int stabilizer) {
    return ExceptionalId{kind, 0, s, BigInt(stabilizer)};
  };
  auto is = [&](int mm, int nn, int ll) { return m == mm && n == nn && ell == ll; };

  // |Aut| / order: 72/6, 48/8, 336/14, 96/16, 216/18.
  if (is(1, 6, 3)) return sporadic(NamedKind::K33, 3, 12);
  if (is(2, 4, 0) || is(2, 4, 2) || is(1, 8, 3)) return sporadic(NamedKind::Cube, 2, 6);
  if (is(1, 14, 5)) return sporadic(NamedKind::Heawood, 4, 24);
  if (is(1, 16, 5) || is(2, 8, 4)) return sporadic(NamedKind::MoebiusKantor, 2, 6);
  if (is(3, 6, 3)) return sporadic(NamedKind::Pappus, 3, 12);

  const int mn = m * n;
  if (mn % 4 == 0 && mn / 4 > 2) {
    const int np = mn / 4;
    if (n == 4 || (m == 1 && n == 4 * np && ell == 2 * np - 1) ||
        (m == 2 && n == 2 * np && ell == 2)) {
      return ExceptionalId{NamedKind::GeneralizedPrism, np, std::nullopt,
                           BigInt(1) << (np - 1)};
    }
  }
  return std::nullopt;
}

}  // namespace htg
