#include "htg/graph_io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

#include "htg/errors.hpp"

namespace htg {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  if (n <= 258047) {
    out.push_back('~');
  } else {
    out.append("~~");
    groups = 6;
  }
  for (int k = groups - 1; k >= 0; --k) {
    out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3F) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) {
    throw HtgError(Errc::Graph6Format, "truncated graph6 string");
  }
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) {
    throw HtgError(Errc::Graph6Format,
                   "byte " + std::to_string(c) + " outside 63..126");
  }
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  put_size(out, n);

  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) {
    out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw HtgError(Errc::Graph6Format, "empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, pos++));
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == '~') {
      groups = 6;
      pos = 2;
    }
    for (int k = 0; k < groups; ++k) {
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    }
  }
  if (n > 100000) {
    throw HtgError(Errc::TooLarge, "graph6 order " + std::to_string(n));
  }

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != body) {
    throw HtgError(Errc::Graph6Format,
                   "expected " + std::to_string(body) + " data bytes, got " +
                       std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t index = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int byte = sextet(text, pos + index / 6);
      if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (pairs % 6 != 0) {
    const int last = sextet(text, text.size() - 1);
    if (last & ((1 << (6 - pairs % 6)) - 1)) {
      throw HtgError(Errc::Graph6Format, "nonzero padding bits");
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g, std::string_view name,
                   const EdgeAttributes& attributes) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (attributes) {
      const std::string attr = attributes(e);
      if (!attr.empty()) out << " [" << attr << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace htg
