#include "treesigma/graph6.hpp"

#include <cstdint>
#include <vector>

#include "treesigma/errors.hpp"

namespace treesigma {

namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 36) - 1;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input truncated", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("invalid graph6 byte " + std::to_string(c), pos);
  return c - kBias;
}

void append_order(std::string& out, std::uint64_t n) {
  auto push_bits = [&](int groups) {
    for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(((n >> (6 * g)) & 63) + kBias));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    push_bits(3);
  } else {
    out.append("~~");
    push_bits(6);
  }
}

}  // namespace

Tree parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, 0));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos));
  } else {
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos));
  }
  if (n == 0) throw ParseError("graph6 encodes the empty graph; a tree needs at least one vertex", 0);
  if (n > kMaxOrder || n > 1'000'000) throw ParseError("graph6 order " + std::to_string(n) + " is too large", 0);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body) throw ParseError("graph6 input truncated", text.size());
  if (text.size() > pos + body) throw ParseError("unexpected trailing bytes after graph6 body", pos + body);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  const int order = static_cast<int>(n);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = sextet(text, at);
      if ((value >> (5 - static_cast<int>(k % 6))) & 1) {
        edges.emplace_back(i, j);
        if (edges.size() > n) {
          throw StructuralError("graph has more than " + std::to_string(n) + " edges, expected n-1 = " +
                                std::to_string(n - 1));
        }
      }
    }
  }
  // Validate the padding sextets' alphabet even when they carry no bits.
  for (std::size_t at = pos; at < pos + body; ++at) sextet(text, at);
  return Tree::from_edges(order, edges);
}

std::string write_graph6(const Tree& t) {
  const int n = t.order();
  std::string out;
  append_order(out, static_cast<std::uint64_t>(n));

  std::vector<char> adjacent(static_cast<std::size_t>(n), 0);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (Vertex u : t.neighbors(j)) adjacent[u] = 1;
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adjacent[i];
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
    for (Vertex u : t.neighbors(j)) adjacent[u] = 0;
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace treesigma
