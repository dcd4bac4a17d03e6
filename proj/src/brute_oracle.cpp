#include "csrg/brute_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace csrg
{

namespace
{

std::vector<Vertex> bfs_order(SimpleGraph const &g)
{
  std::vector<Vertex> order;
  std::vector<bool> seen(g.vertex_count(), false);

  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root])
      continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    for (; head < order.size(); ++head) {
      g.neighbors(order[head]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(static_cast<Vertex>(w));
        }
      });
    }
  }
  return order;
}

class Search
{
public:
  Search(SimpleGraph const &g, std::size_t limit)
  : _g(g), _limit(limit), _order(bfs_order(g)), _image(g.vertex_count()),
    _used(g.vertex_count())
  {}

  std::vector<Permutation> run()
  {
    if (_g.vertex_count() == 0)
      return {};
    extend(0);
    std::sort(_found.begin(), _found.end());
    return std::move(_found);
  }

private:
  void extend(std::size_t depth)
  {
    auto count = _g.vertex_count();
    if (depth == count) {
      record();
      return;
    }

    Vertex v = _order[depth];
    Bitset candidates(count);
    for (Vertex t = 0; t < count; ++t) {
      if (!_used.test(t) && _g.degree(t) == _g.degree(v))
        candidates.set(t);
    }

    for (std::size_t j = 0; j < depth && !candidates.none(); ++j) {
      Vertex earlier = _order[j];
      if (_g.adjacent_unchecked(earlier, v))
        candidates &= _g.neighbors(_image[earlier]);
      else
        candidates.subtract(_g.neighbors(_image[earlier]));
    }

    candidates.for_each([&](std::size_t t) {
      _image[v] = static_cast<Vertex>(t);
      _used.set(t);
      extend(depth + 1);
      _used.reset(t);
    });
  }

  void record()
  {
    if (_found.size() == _limit)
      throw std::length_error("more than " + std::to_string(_limit) +
                              " automorphisms");

    // Independent re-check of every pair before accepting the map.
    auto count = _g.vertex_count();
    for (Vertex u = 0; u < count; ++u) {
      for (Vertex w = u + 1; w < count; ++w) {
        if (_g.adjacent_unchecked(u, w) !=
            _g.adjacent_unchecked(_image[u], _image[w]))
          throw std::logic_error("backtracking produced a non-automorphism");
      }
    }
    _found.emplace_back(_image);
  }

  SimpleGraph const &_g;
  std::size_t _limit;
  std::vector<Vertex> _order;
  std::vector<Vertex> _image;
  Bitset _used;
  std::vector<Permutation> _found;
};

} // namespace

AutomorphismList enumerate_graph_automorphisms(SimpleGraph const &g,
                                               std::size_t limit)
{
  return AutomorphismList{Search(g, limit).run(), 0};
}

AutomorphismList enumerate_automorphisms(CayleyGraph const &g)
{
  if (g.n() > oracle_max_modulus)
    throw std::domain_error(
      "brute-force automorphism search is limited to n <= 7 (got n = " +
      std::to_string(g.n()) + "); use the BSGS path (claimed_aut_group) instead");

  auto list = enumerate_graph_automorphisms(g);
  list.graph_n = g.n();
  return list;
}

std::size_t common_neighbor_count(SimpleGraph const &g, Vertex u, Vertex v)
{
  if (u == v)
    throw std::invalid_argument("common neighbours need distinct vertices");
  return g.neighbors(u).and_count(g.neighbors(v));
}

} // namespace csrg
