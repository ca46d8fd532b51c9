#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace matchspec {

/// Largest order handled by the one-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

// graph6 (short form): byte n+63, then the upper triangle of the adjacency
// matrix in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian
// into 6-bit groups each offset by 63; the last group is zero-padded.

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126");
  }
  if (text[0] == 126) throw ParseError("graph6: long-form header (n > 62) is not supported");
  const int n = text[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != groups + 1)
    throw ParseError("graph6: expected " + std::to_string(groups + 1) + " bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size()));

  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        masks[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        masks[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (groups > 0) {
    const std::size_t used = bits - 6 * (groups - 1);
    const int tail = text.back() - 63;
    if ((tail & ((1 << (6 - used)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_masks(std::move(masks));
}

/// Encoding of this particular labelling (not canonical up to isomorphism).
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw RangeError("graph6: only n <= 62 is supported");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace matchspec
