#include "csrg/cayley_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace csrg
{

ConnectionSet::ConnectionSet(int n, std::vector<ZnPair> members)
: _n(n), _members(std::move(members))
{
  if (n < min_modulus)
    throw std::invalid_argument("modulus must be at least 4, got " +
                                std::to_string(n));

  auto degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  _lookup.assign(degree, false);

  for (auto const &p : _members) {
    if (p.n() != n)
      throw std::invalid_argument("connection set element " + p.to_string() +
                                  " has modulus " + std::to_string(p.n()));
    if (p.i() == 0 && p.j() == 0)
      throw std::invalid_argument("connection set contains the identity");
    _lookup[vertex_index(p)] = true;
  }

  std::sort(_members.begin(), _members.end());
  _members.erase(std::unique(_members.begin(), _members.end()), _members.end());

  for (auto const &p : _members) {
    if (!_lookup[vertex_index(pair_neg(p))])
      throw std::invalid_argument("connection set not closed under negation: " +
                                  p.to_string());
  }
}

bool ConnectionSet::contains(ZnPair const &p) const
{
  if (p.n() != _n)
    throw std::invalid_argument("modulus mismatch in connection set lookup");
  return _lookup[vertex_index(p)];
}

ConnectionSet connection_set(int n)
{
  if (n < min_modulus)
    throw std::invalid_argument("Γ(n) needs n >= 4, got " + std::to_string(n));

  std::vector<ZnPair> members;
  members.reserve(3 * static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    members.emplace_back(n, i, 0);
    members.emplace_back(n, 0, i);
    members.emplace_back(n, i, i);
  }
  return ConnectionSet(n, std::move(members));
}

CayleyGraph::CayleyGraph(ConnectionSet s)
: SimpleGraph(static_cast<std::size_t>(s.n()) * static_cast<std::size_t>(s.n())),
  _connection(std::move(s))
{
  int n = _connection.n();
  for (Vertex u = 0; u < vertex_count(); ++u) {
    ZnPair pu = pair_of(u, n);
    for (auto const &d : _connection.members())
      _adjacency[u].set(vertex_index(pair_add(pu, d)));
  }
}

bool CayleyGraph::difference_in_connection_set(Vertex u, Vertex v) const
{
  check_vertex(u);
  check_vertex(v);
  return _connection.contains(pair_sub(pair(v), pair(u)));
}

void CayleyGraph::validate() const
{
  std::size_t k = _connection.size();

  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (_adjacency[u].count() != k)
      throw std::logic_error("vertex " + std::to_string(u) + " has degree " +
                             std::to_string(_adjacency[u].count()) +
                             ", expected " + std::to_string(k));
    if (_adjacency[u].test(u))
      throw std::logic_error("loop at vertex " + std::to_string(u));

    _adjacency[u].for_each([&](std::size_t w) {
      if (!_adjacency[w].test(u))
        throw std::logic_error("asymmetric adjacency between " +
                               std::to_string(u) + " and " + std::to_string(w));
    });
  }
}

CayleyGraph build_cayley(ConnectionSet s)
{
  CayleyGraph g(std::move(s));
  g.validate();
  return g;
}

CayleyGraph build_gamma(int n)
{
  if (n < min_modulus || n > max_modulus)
    throw std::invalid_argument("Γ(n) is built for 4 <= n <= 1000, got " +
                                std::to_string(n));

  CayleyGraph g(connection_set(n));
  g.validate();
  if (!g.is_connected())
    throw std::logic_error("Γ(" + std::to_string(n) + ") is not connected");
  return g;
}

CliqueTriple zero_neighborhood_cliques(CayleyGraph const &g)
{
  int n = g.n();
  CliqueTriple triple;

  for (int i = 1; i < n; ++i) {
    triple.c[0].push_back(g.vertex(i, 0));
    triple.c[1].push_back(g.vertex(0, i));
    triple.c[2].push_back(g.vertex(i, i));
  }
  for (auto &clique : triple.c)
    std::sort(clique.begin(), clique.end());

  Bitset const &zero_nbhd = g.neighbors(0);
  Bitset covered(g.vertex_count());

  for (std::size_t k = 0; k < 3; ++k) {
    auto const &clique = triple.c[k];

    for (std::size_t a = 0; a < clique.size(); ++a) {
      if (!zero_nbhd.test(clique[a]))
        throw std::logic_error("clique member outside N((0,0))");
      if (covered.test(clique[a]))
        throw std::logic_error("cliques of N((0,0)) overlap");
      covered.set(clique[a]);

      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (!g.adjacent_unchecked(clique[a], clique[b]))
          throw std::logic_error("clique C" + std::to_string(k + 1) +
                                 " is not complete");
      }
    }

    // Maximal inside N((0,0)): no outside neighbour of 0 sees the whole clique.
    for (std::size_t w = zero_nbhd.find_first(); w < zero_nbhd.size();
         w = zero_nbhd.find_next(w + 1)) {
      if (std::binary_search(clique.begin(), clique.end(), w))
        continue;
      bool sees_all = std::all_of(clique.begin(), clique.end(), [&](Vertex x) {
        return g.adjacent_unchecked(static_cast<Vertex>(w), x);
      });
      if (sees_all)
        throw std::logic_error("clique C" + std::to_string(k + 1) +
                               " is not maximal in N((0,0))");
    }
  }

  if (covered != zero_nbhd)
    throw std::logic_error("cliques do not cover N((0,0))");

  return triple;
}

} // namespace csrg
