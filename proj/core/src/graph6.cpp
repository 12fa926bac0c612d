#include "kemeny/graph6.hpp"

#include <vector>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t edge_bits(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  const auto head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw ParseError("graph6 long form (n > 62) is not supported", base);
  }
  if (head < 63 || head > 126) {
    throw ParseError("invalid graph6 order byte", base);
  }
  const std::size_t n = head - 63;
  if (n == 0) throw ParseError("graph6 order must be at least 1", base);

  const std::size_t bits = edge_bits(n);
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(text.size()) +
                         " does not match n = " + std::to_string(n) +
                         " (expected " + std::to_string(expected) + ")",
                     base + std::min(text.size(), expected));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;  // bit index over the upper triangle in column order
  for (std::size_t pos = 1; pos < text.size(); ++pos) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < 63 || byte > 126) {
      throw ParseError("invalid graph6 data byte", base + pos);
    }
    const unsigned value = byte - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1u;
      if (k >= bits) {
        if (set) throw ParseError("nonzero graph6 padding bit", base + pos);
        continue;
      }
      if (!set) continue;
      // Column j holds bits for rows 0..j-1.
      std::size_t j = 1;
      std::size_t start = 0;
      while (start + j <= k) {
        start += j;
        ++j;
      }
      pairs.emplace_back(static_cast<Vertex>(k - start), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(n, pairs);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw ValidationError("graph6 short form supports at most 62 vertices");
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned value = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) |
              (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    value <<= (6 - filled);
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

bool read_graph6_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
  if (line.starts_with(kHeader)) line.erase(0, kHeader.size());
  return true;
}

}  // namespace kemeny
