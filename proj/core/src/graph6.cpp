#include "k4tri/graph6.hpp"

#include "k4tri/error.hpp"

namespace k4tri {

namespace {

constexpr char kBias = 63;

[[noreturn]] void fail(const std::string& why) {
  throw Error(ErrorKind::kParseError, "graph6: " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail("empty record");
  for (char ch : text) {
    if (ch < 63 || ch > 126) fail("byte outside printable graph6 range");
  }

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') fail("unsupported size prefix");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
    if (n < 63) fail("long size prefix used for order below 63");
  }
  if (n > Graph::kMaxVertices) fail("order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    fail("expected " + std::to_string(bytes) + " data bytes, got " +
         std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) fail("nonzero padding bits");
  }
  return g;
}

}  // namespace k4tri
