#ifndef CSRG_CAYLEY_GRAPH_HPP
#define CSRG_CAYLEY_GRAPH_HPP

#include <array>
#include <vector>

#include "csrg/graph.hpp"
#include "csrg/zn.hpp"

namespace csrg
{

/// Largest modulus accepted by build_gamma (adjacency storage is n⁴ bits).
inline constexpr int max_modulus = 1000;

/// A symmetric, identity-free subset S of Z_n×Z_n.
class ConnectionSet
{
public:
  /// Throws std::invalid_argument if S contains (0,0), is not closed under
  /// negation, or mixes moduli.
  ConnectionSet(int n, std::vector<ZnPair> members);

  int n() const { return _n; }
  std::vector<ZnPair> const &members() const { return _members; }
  std::size_t size() const { return _members.size(); }
  bool contains(ZnPair const &p) const;

private:
  int _n;
  std::vector<ZnPair> _members; // sorted
  std::vector<bool> _lookup;    // indexed by vertex_index
};

/// S = {(i,0), (0,i), (i,i) : 1 <= i <= n-1}. Throws for n < 4.
ConnectionSet connection_set(int n);

/// Γ(n) = Cay(Z_n×Z_n; S).
class CayleyGraph : public SimpleGraph
{
public:
  int n() const { return _connection.n(); }
  ConnectionSet const &connection() const { return _connection; }

  ZnPair pair(Vertex v) const { return pair_of(v, n()); }
  Vertex vertex(int i, int j) const { return vertex_index(ZnPair(n(), i, j)); }

  /// Adjacency decided from the group structure (pair(v) - pair(u) ∈ S).
  bool difference_in_connection_set(Vertex u, Vertex v) const;

private:
  explicit CayleyGraph(ConnectionSet s);
  void validate() const;

  friend CayleyGraph build_gamma(int n);
  friend CayleyGraph build_cayley(ConnectionSet s);

  ConnectionSet _connection;
};

/// Builds Γ(n) for 4 <= n <= 1000 and validates degree, symmetry and
/// connectivity. Throws std::invalid_argument outside that range.
CayleyGraph build_gamma(int n);

/// Cayley graph of Z_n×Z_n for an arbitrary connection set. Validates
/// symmetry and regularity; connectivity is not required.
CayleyGraph build_cayley(ConnectionSet s);

/// The three cliques partitioning the neighbourhood of (0,0):
/// c[0] = {(i,0)}, c[1] = {(0,i)}, c[2] = {(i,i)}, each sorted.
struct CliqueTriple
{
  std::array<std::vector<Vertex>, 3> c;
};

/// Computes the triple and verifies that each set is a clique, that the
/// three partition N((0,0)), and that each is maximal inside N((0,0)).
/// Throws std::logic_error if any check fails.
CliqueTriple zero_neighborhood_cliques(CayleyGraph const &g);

} // namespace csrg

#endif // CSRG_CAYLEY_GRAPH_HPP
