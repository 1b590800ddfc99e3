#pragma once

// Text formats: graph6 (bit-exact to the nauty definition) and a plain
// edge list ("n m" header, then m lines "u v", '#' starts a comment).

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::string_view graph6_header = ">>graph6<<";

inline void append_bits(std::string& out, std::uint64_t value, int nbits) {
  for (int shift = nbits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(63 + ((value >> shift) & 0x3F)));
}

inline int sixbits(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw ParseError("graph6: illegal character code " + std::to_string(u));
  return u - 63;
}

}  // namespace detail

inline std::string serialize_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    detail::append_bits(out, n, 18);
  } else {
    out.append("~~");
    detail::append_bits(out, n, 36);
  }
  int filled = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        filled = 0;
        acc = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Parses one graph6 string. The ">>graph6<<" header and a trailing newline are accepted.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(detail::graph6_header)) text.remove_prefix(detail::graph6_header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw ParseError("graph6: truncated length prefix");
      v = (v << 6) | static_cast<std::uint64_t>(detail::sixbits(text[pos++]));
    }
    return v;
  };

  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() >= 2 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > (std::uint64_t{1} << 20))
    throw ParseError("graph6: vertex count " + std::to_string(n) + " exceeds supported size");

  const std::uint64_t nbits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                     std::to_string(text.size() - pos));

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const int chunk = detail::sixbits(text[k]);
    for (int s = 5; s >= 0; --s, ++bit) {
      const bool set = (chunk >> s) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("graph6: non-zero padding bits");
        continue;
      }
      if (set) b.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return std::move(b).build();
}

/// Reads "n m" then m "u v" lines. Blank lines and '#' comments are ignored.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        tokens.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("edge list: bad token '" + tok + "' on line " + std::to_string(lineno));
      }
    }
  }
  if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
  const auto n = static_cast<std::size_t>(tokens[0]);
  const auto m = static_cast<std::size_t>(tokens[1]);
  if (tokens.size() != 2 + 2 * m)
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string((tokens.size() - 2) / 2) + (tokens.size() % 2 ? " and a dangling token" : ""));
  GraphBuilder b(n);
  for (std::size_t e = 0; e < m; ++e) {
    const auto u = tokens[2 + 2 * e];
    const auto v = tokens[3 + 2 * e];
    if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    try {
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("edge list: ") + ex.what());
    }
  }
  return std::move(b).build();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace wheelfree
