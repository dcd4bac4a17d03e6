#include "csrg/export.hpp"

#include <sstream>
#include <stdexcept>

namespace csrg
{

namespace
{

constexpr char graph6_offset = 63;

void append_size(std::string &out, std::size_t n)
{
  auto put = [&out](std::uint64_t value, int groups) {
    for (int g = groups - 1; g >= 0; --g)
      out.push_back(static_cast<char>(((value >> (6 * g)) & 0x3f) + graph6_offset));
  };

  if (n <= 62) {
    out.push_back(static_cast<char>(n + graph6_offset));
  } else if (n <= 258047) {
    out.push_back('~');
    put(n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    put(n, 6);
  }
}

} // namespace

std::string encode_graph6(SimpleGraph const &g)
{
  std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);

  int filled = 0;
  unsigned group = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent_unchecked(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + graph6_offset));
        filled = 0;
        group = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + graph6_offset));

  return out;
}

SimpleGraph decode_graph6(std::string_view text)
{
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size())
      throw std::invalid_argument("graph6: truncated input");
    auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: invalid character");
    return c - 63u;
  };

  std::uint64_t n = 0;
  if (text.empty())
    throw std::invalid_argument("graph6: empty input");
  if (text[0] != '~') {
    n = next();
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      groups = 6;
    }
    for (int g = 0; g < groups; ++g)
      n = (n << 6) | next();
  }

  SimpleGraph g(static_cast<std::size_t>(n));
  std::uint64_t group = 0;
  int remaining = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (remaining == 0) {
        group = next();
        remaining = 6;
      }
      --remaining;
      if ((group >> remaining) & 1u)
        g.add_edge(i, j);
    }
  }

  if (pos != text.size())
    throw std::invalid_argument("graph6: trailing data");
  return g;
}

std::string to_dot(CayleyGraph const &g)
{
  std::ostringstream os;
  os << "graph Gamma_" << g.n() << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << g.pair(v).to_string() << "\"];\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    g.neighbors(u).for_each([&](std::size_t w) {
      if (w > u)
        os << "  " << u << " -- " << w << ";\n";
    });
  }
  os << "}\n";
  return os.str();
}

} // namespace csrg
