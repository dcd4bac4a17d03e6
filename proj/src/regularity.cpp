#include "csrg/regularity.hpp"

#include <algorithm>
#include <sstream>

namespace csrg
{

std::string IntersectionArray::to_string() const
{
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < b.size(); ++k)
    os << (k ? ", " : "") << b[k];
  os << "; ";
  for (std::size_t k = 0; k < c.size(); ++k)
    os << (k ? ", " : "") << c[k];
  os << '}';
  return os.str();
}

std::vector<std::vector<int>> distance_matrix(SimpleGraph const &g)
{
  std::vector<std::vector<int>> result;
  result.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    result.push_back(g.bfs_distances(v));
  return result;
}

namespace
{

std::optional<Refusal> check_connected_regular(SimpleGraph const &g)
{
  if (g.vertex_count() == 0)
    return Refusal{"empty graph", std::nullopt};

  if (!g.is_connected()) {
    auto dist = g.bfs_distances(0);
    auto far = static_cast<Vertex>(
      std::find(dist.begin(), dist.end(), unreachable) - dist.begin());
    return Refusal{"graph is disconnected", std::pair<Vertex, Vertex>{0, far}};
  }

  std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k)
      return Refusal{"graph is not regular: degree " + std::to_string(k) +
                       " at 0 but " + std::to_string(g.degree(v)) + " at " +
                       std::to_string(v),
                     std::pair<Vertex, Vertex>{0, v}};
  }
  return std::nullopt;
}

} // namespace

Verdict<SrgParams> check_strongly_regular(SimpleGraph const &g)
{
  if (auto refusal = check_connected_regular(g))
    return *refusal;

  auto count = g.vertex_count();
  std::optional<std::size_t> lambda, mu;

  for (Vertex u = 0; u < count; ++u) {
    for (Vertex v = u + 1; v < count; ++v) {
      std::size_t common = g.neighbors(u).and_count(g.neighbors(v));
      auto &slot = g.adjacent_unchecked(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return Refusal{std::string(g.adjacent_unchecked(u, v) ? "adjacent"
                                                              : "non-adjacent") +
                         " pair has " + std::to_string(common) +
                         " common neighbours, expected " + std::to_string(*slot),
                       std::pair<Vertex, Vertex>{u, v}};
      }
    }
  }

  if (!lambda || !mu)
    return Refusal{"complete or edgeless graph: lambda or mu undefined",
                   std::nullopt};

  return SrgParams{static_cast<long long>(count),
                   static_cast<long long>(g.degree(0)),
                   static_cast<long long>(*lambda), static_cast<long long>(*mu)};
}

Verdict<IntersectionArray> intersection_array(SimpleGraph const &g)
{
  if (g.vertex_count() == 0)
    return Refusal{"empty graph", std::nullopt};
  if (!g.is_connected())
    return Refusal{"graph is disconnected", std::nullopt};

  auto count = g.vertex_count();
  auto dist = distance_matrix(g);

  int diam = 0;
  for (auto const &row : dist)
    diam = std::max(diam, *std::max_element(row.begin(), row.end()));

  // b[i] for i in 0..D-1, c[i] for i in 1..D; -1 = not yet observed.
  std::vector<long long> b(static_cast<std::size_t>(diam) + 1, -1);
  std::vector<long long> c(static_cast<std::size_t>(diam) + 1, -1);

  for (Vertex v = 0; v < count; ++v) {
    std::vector<Bitset> layer(static_cast<std::size_t>(diam) + 1, Bitset(count));
    for (Vertex w = 0; w < count; ++w)
      layer[static_cast<std::size_t>(dist[v][w])].set(w);

    for (Vertex u = 0; u < count; ++u) {
      auto i = static_cast<std::size_t>(dist[v][u]);
      Bitset const &nu = g.neighbors(u);

      long long closer = i > 0 ? static_cast<long long>(nu.and_count(layer[i - 1])) : 0;
      long long farther = i < static_cast<std::size_t>(diam)
                            ? static_cast<long long>(nu.and_count(layer[i + 1]))
                            : 0;

      if (i > 0) {
        if (c[i] < 0) {
          c[i] = closer;
        } else if (c[i] != closer) {
          return Refusal{"c_" + std::to_string(i) + " is not constant: " +
                           std::to_string(c[i]) + " vs " + std::to_string(closer),
                         std::pair<Vertex, Vertex>{u, v}};
        }
      }
      if (i < static_cast<std::size_t>(diam)) {
        if (b[i] < 0) {
          b[i] = farther;
        } else if (b[i] != farther) {
          return Refusal{"b_" + std::to_string(i) + " is not constant: " +
                           std::to_string(b[i]) + " vs " + std::to_string(farther),
                         std::pair<Vertex, Vertex>{u, v}};
        }
      }
    }
  }

  IntersectionArray result;
  result.b.assign(b.begin(), b.end() - 1);
  result.c.assign(c.begin() + 1, c.end());
  return result;
}

Verdict<int> diameter(SimpleGraph const &g)
{
  if (g.vertex_count() == 0)
    return Refusal{"empty graph", std::nullopt};

  int result = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = g.bfs_distances(v);
    for (Vertex w = 0; w < dist.size(); ++w) {
      if (dist[w] == unreachable)
        return Refusal{"graph is disconnected", std::pair<Vertex, Vertex>{v, w}};
      result = std::max(result, dist[w]);
    }
  }
  return result;
}

} // namespace csrg
