#include "csrg/graph.hpp"

#include <stdexcept>
#include <string>

namespace csrg
{

SimpleGraph::SimpleGraph(std::size_t vertex_count)
: _adjacency(vertex_count, Bitset(vertex_count))
{}

SimpleGraph SimpleGraph::from_edges(
  std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> const &edges)
{
  SimpleGraph g(vertex_count);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

std::size_t SimpleGraph::edge_count() const
{
  std::size_t twice = 0;
  for (auto const &row : _adjacency)
    twice += row.count();
  return twice / 2;
}

void SimpleGraph::check_vertex(Vertex v) const
{
  if (v >= _adjacency.size())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph on " +
                            std::to_string(_adjacency.size()) + " vertices");
}

void SimpleGraph::add_edge(Vertex u, Vertex v)
{
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));

  _adjacency[u].set(v);
  _adjacency[v].set(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v)
{
  check_vertex(u);
  check_vertex(v);
  _adjacency[u].reset(v);
  _adjacency[v].reset(u);
}

bool SimpleGraph::is_adjacent(Vertex u, Vertex v) const
{
  check_vertex(u);
  check_vertex(v);
  return _adjacency[u].test(v);
}

std::vector<Vertex> SimpleGraph::neighbor_list(Vertex v) const
{
  check_vertex(v);
  std::vector<Vertex> result;
  _adjacency[v].for_each(
    [&result](std::size_t w) { result.push_back(static_cast<Vertex>(w)); });
  return result;
}

std::vector<int> SimpleGraph::bfs_distances(Vertex source) const
{
  check_vertex(source);

  std::vector<int> dist(_adjacency.size(), unreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;

  for (std::size_t k = 0; k < queue.size(); ++k) {
    Vertex u = queue[k];
    _adjacency[u].for_each([&](std::size_t w) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(static_cast<Vertex>(w));
      }
    });
  }
  return dist;
}

bool SimpleGraph::is_connected() const
{
  if (_adjacency.empty())
    return true;

  for (int d : bfs_distances(0)) {
    if (d == unreachable)
      return false;
  }
  return true;
}

} // namespace csrg
