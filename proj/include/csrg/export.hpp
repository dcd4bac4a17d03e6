#ifndef CSRG_EXPORT_HPP
#define CSRG_EXPORT_HPP

#include <string>
#include <string_view>

#include "csrg/cayley_graph.hpp"
#include "csrg/graph.hpp"

namespace csrg
{

/// Standard graph6 encoding (no trailing newline).
std::string encode_graph6(SimpleGraph const &g);

/// Parses a graph6 string; an optional ">>graph6<<" header and trailing
/// newline are accepted. Throws std::invalid_argument on malformed input.
SimpleGraph decode_graph6(std::string_view text);

/// Undirected DOT with vertices labelled "(i,j)".
std::string to_dot(CayleyGraph const &g);

} // namespace csrg

#endif // CSRG_EXPORT_HPP
