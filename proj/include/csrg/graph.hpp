#ifndef CSRG_GRAPH_HPP
#define CSRG_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "csrg/bitset.hpp"
#include "csrg/zn.hpp"

namespace csrg
{

/// Sentinel distance for unreachable vertices.
inline constexpr int unreachable = -1;

/// Undirected simple graph with one adjacency bitset per vertex.
class SimpleGraph
{
public:
  explicit SimpleGraph(std::size_t vertex_count);

  /// Throws std::invalid_argument on loops, std::out_of_range on bad endpoints.
  static SimpleGraph from_edges(std::size_t vertex_count,
                                std::vector<std::pair<Vertex, Vertex>> const &edges);

  std::size_t vertex_count() const { return _adjacency.size(); }
  std::size_t edge_count() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Bounds-checked; throws std::out_of_range.
  bool is_adjacent(Vertex u, Vertex v) const;

  bool adjacent_unchecked(Vertex u, Vertex v) const
  { return _adjacency[u].test(v); }

  Bitset const &neighbors(Vertex v) const { return _adjacency.at(v); }
  std::vector<Vertex> neighbor_list(Vertex v) const;
  std::size_t degree(Vertex v) const { return _adjacency.at(v).count(); }

  /// Exact BFS distances; unreachable vertices get `unreachable`.
  std::vector<int> bfs_distances(Vertex source) const;

  bool is_connected() const;

  friend bool operator==(SimpleGraph const &, SimpleGraph const &) = default;

protected:
  void check_vertex(Vertex v) const;

  std::vector<Bitset> _adjacency;
};

} // namespace csrg

#endif // CSRG_GRAPH_HPP
