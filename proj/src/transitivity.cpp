#include "csrg/transitivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "csrg/named_automorphisms.hpp"
#include "csrg/regularity.hpp"

namespace csrg
{

bool TransitivityReport::implications_hold() const
{
  if (arc.holds && !edge.holds)
    return false;
  if (two_arc.holds && !arc.holds)
    return false;
  if (distance.holds && distance_classes.size() > 1 && !arc.holds)
    return false;
  return true;
}

TransitivityAnalyzer::TransitivityAnalyzer(GeneratedGroup const &group,
                                           SimpleGraph const &graph)
: _group(group), _graph(graph)
{
  if (group.degree() != graph.vertex_count())
    throw std::invalid_argument("group degree " + std::to_string(group.degree()) +
                                " does not match vertex count " +
                                std::to_string(graph.vertex_count()));

  for (std::size_t k = 0; k < group.generators().size(); ++k) {
    if (!is_graph_automorphism(graph, group.generators()[k]))
      throw std::invalid_argument("generator " + std::to_string(k) +
                                  " is not an automorphism of the graph");
  }

  _dist = distance_matrix(graph);
  for (auto const &row : _dist) {
    for (int d : row) {
      if (d == unreachable)
        throw std::invalid_argument("distance transitivity needs a connected graph");
      _diameter = std::max(_diameter, d);
    }
  }
}

TransitivityCheck TransitivityAnalyzer::partition(std::size_t arity,
                                                  std::vector<std::uint64_t> universe,
                                                  bool unordered_pairs) const
{
  std::size_t degree = _graph.vertex_count();
  std::sort(universe.begin(), universe.end());

  TransitivityCheck check;
  check.class_size = universe.size();

  std::vector<std::int32_t> label(universe.size(), -1);
  std::vector<std::size_t> queue;
  std::vector<Vertex> image(arity);
  std::vector<std::size_t> orbit_first;

  auto index_of = [&](std::uint64_t code) {
    auto it = std::lower_bound(universe.begin(), universe.end(), code);
    if (it == universe.end() || *it != code)
      throw std::invalid_argument("group action leaves the object class");
    return static_cast<std::size_t>(it - universe.begin());
  };

  for (std::size_t start = 0; start < universe.size(); ++start) {
    if (label[start] >= 0)
      continue;

    auto orbit_id = static_cast<std::int32_t>(check.orbit_sizes.size());
    orbit_first.push_back(start);
    label[start] = orbit_id;
    queue.assign(1, start);

    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto tuple = decode_tuple(universe[queue[head]], arity, degree);
      for (auto const &gen : _group.generators()) {
        for (std::size_t t = 0; t < arity; ++t)
          image[t] = gen[tuple[t]];
        if (unordered_pairs && image[0] > image[1])
          std::swap(image[0], image[1]);

        std::size_t idx = index_of(encode_tuple(image, degree));
        if (label[idx] < 0) {
          label[idx] = orbit_id;
          queue.push_back(idx);
        }
      }
    }
    check.orbit_sizes.push_back(queue.size());
  }

  check.holds = check.orbit_sizes.size() <= 1;
  if (!check.holds) {
    check.witness = OrbitWitness{
      decode_tuple(universe[orbit_first[0]], arity, degree),
      decode_tuple(universe[orbit_first[1]], arity, degree)};
  }
  return check;
}

TransitivityCheck TransitivityAnalyzer::vertices() const
{
  std::vector<std::uint64_t> universe(_graph.vertex_count());
  for (std::size_t v = 0; v < universe.size(); ++v)
    universe[v] = v;
  return partition(1, std::move(universe), false);
}

TransitivityCheck TransitivityAnalyzer::edges() const
{
  std::size_t degree = _graph.vertex_count();
  std::vector<std::uint64_t> universe;
  for (Vertex u = 0; u < degree; ++u) {
    _graph.neighbors(u).for_each([&](std::size_t w) {
      if (w > u)
        universe.push_back(static_cast<std::uint64_t>(u) * degree + w);
    });
  }
  return partition(2, std::move(universe), true);
}

TransitivityCheck TransitivityAnalyzer::arcs() const
{
  std::size_t degree = _graph.vertex_count();
  std::vector<std::uint64_t> universe;
  for (Vertex u = 0; u < degree; ++u) {
    _graph.neighbors(u).for_each([&](std::size_t w) {
      universe.push_back(static_cast<std::uint64_t>(u) * degree + w);
    });
  }
  return partition(2, std::move(universe), false);
}

TransitivityCheck TransitivityAnalyzer::distance_class(int d) const
{
  std::size_t degree = _graph.vertex_count();
  std::vector<std::uint64_t> universe;
  for (Vertex u = 0; u < degree; ++u) {
    for (Vertex w = 0; w < degree; ++w) {
      if (_dist[u][w] == d)
        universe.push_back(static_cast<std::uint64_t>(u) * degree + w);
    }
  }
  return partition(2, std::move(universe), false);
}

namespace
{

TransitivityCheck combine(std::vector<TransitivityCheck> const &classes)
{
  TransitivityCheck combined;
  combined.holds = true;

  for (auto const &check : classes) {
    combined.class_size += check.class_size;
    combined.orbit_sizes.insert(combined.orbit_sizes.end(),
                                check.orbit_sizes.begin(), check.orbit_sizes.end());
    if (!check.holds && combined.holds) {
      combined.holds = false;
      combined.witness = check.witness;
    }
  }
  return combined;
}

} // namespace

TransitivityCheck TransitivityAnalyzer::distances() const
{
  std::vector<TransitivityCheck> classes;
  for (int d = 0; d <= _diameter; ++d)
    classes.push_back(distance_class(d));
  return combine(classes);
}

TransitivityCheck TransitivityAnalyzer::two_arcs() const
{
  std::size_t degree = _graph.vertex_count();
  std::vector<std::uint64_t> universe;
  for (Vertex v = 0; v < degree; ++v) {
    auto nbrs = _graph.neighbor_list(v);
    for (Vertex u : nbrs) {
      for (Vertex w : nbrs) {
        if (u != w)
          universe.push_back((static_cast<std::uint64_t>(u) * degree + v) * degree + w);
      }
    }
  }
  return partition(3, std::move(universe), false);
}

bool TransitivityAnalyzer::same_orbit(std::span<Vertex const> a,
                                      std::span<Vertex const> b) const
{
  if (a.size() != b.size())
    return false;
  return _group.orbit_of_tuple(a).contains(b);
}

bool TransitivityAnalyzer::same_edge_orbit(std::span<Vertex const> a,
                                           std::span<Vertex const> b) const
{
  if (a.size() != 2 || b.size() != 2)
    throw std::invalid_argument("edges are vertex pairs");
  auto orbit = _group.orbit_of_tuple(a);
  Vertex reversed[] = {b[1], b[0]};
  return orbit.contains(b) || orbit.contains(reversed);
}

TransitivityCheck is_vertex_transitive(GeneratedGroup const &grp, SimpleGraph const &g)
{
  return TransitivityAnalyzer(grp, g).vertices();
}

TransitivityCheck is_edge_transitive(GeneratedGroup const &grp, SimpleGraph const &g)
{
  return TransitivityAnalyzer(grp, g).edges();
}

TransitivityCheck is_arc_transitive(GeneratedGroup const &grp, SimpleGraph const &g)
{
  return TransitivityAnalyzer(grp, g).arcs();
}

TransitivityCheck is_distance_transitive(GeneratedGroup const &grp, SimpleGraph const &g)
{
  return TransitivityAnalyzer(grp, g).distances();
}

TransitivityCheck is_two_arc_transitive(GeneratedGroup const &grp, SimpleGraph const &g)
{
  return TransitivityAnalyzer(grp, g).two_arcs();
}

TransitivityReport classify(GeneratedGroup const &grp, SimpleGraph const &g, int n)
{
  TransitivityAnalyzer analyzer(grp, g);

  TransitivityReport report;
  report.n = n;
  report.vertex = analyzer.vertices();
  report.edge = analyzer.edges();
  report.arc = analyzer.arcs();
  for (int d = 0; d <= analyzer.graph_diameter(); ++d)
    report.distance_classes.push_back(analyzer.distance_class(d));
  report.distance = combine(report.distance_classes);
  report.two_arc = analyzer.two_arcs();
  return report;
}

TransitivityReport classify(int n)
{
  auto g = build_gamma(n);
  auto grp = claimed_aut_group(g);
  return classify(grp, g, n);
}

} // namespace csrg
