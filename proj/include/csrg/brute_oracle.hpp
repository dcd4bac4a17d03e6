#ifndef CSRG_BRUTE_ORACLE_HPP
#define CSRG_BRUTE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "csrg/cayley_graph.hpp"
#include "csrg/graph.hpp"
#include "csrg/permutation.hpp"

namespace csrg
{

/// Largest n for which the exhaustive search on Γ(n) is allowed.
inline constexpr int oracle_max_modulus = 7;

/// The full automorphism group as an explicit, sorted element list.
struct AutomorphismList
{
  std::vector<Permutation> elements;
  int graph_n = 0; // 0 for graphs outside the Γ(n) family
};

/// Exhaustive backtracking over a BFS vertex order: a partial assignment is
/// extended only by images whose adjacency to every earlier image matches.
/// Throws std::length_error if more than `limit` automorphisms exist.
AutomorphismList enumerate_graph_automorphisms(SimpleGraph const &g,
                                               std::size_t limit = 1'000'000);

/// Same search on Γ(n); throws std::domain_error for n > 7.
AutomorphismList enumerate_automorphisms(CayleyGraph const &g);

/// |N(u) ∩ N(v)|; throws std::invalid_argument for u == v.
std::size_t common_neighbor_count(SimpleGraph const &g, Vertex u, Vertex v);

} // namespace csrg

#endif // CSRG_BRUTE_ORACLE_HPP
