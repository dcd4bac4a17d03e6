#ifndef CSRG_TRANSITIVITY_HPP
#define CSRG_TRANSITIVITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "csrg/graph.hpp"
#include "csrg/perm_group.hpp"

namespace csrg
{

/// Two objects of the same class that lie in different orbits, each the
/// lexicographically smallest member of its orbit.
struct OrbitWitness
{
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// Outcome of one transitivity test: the orbit decomposition of a class of
/// objects (vertices, edges, arcs, distance-d pairs or 2-arcs).
struct TransitivityCheck
{
  bool holds = false;
  std::size_t class_size = 0;
  std::vector<std::size_t> orbit_sizes; // in order of smallest member
  std::optional<OrbitWitness> witness;  // present iff !holds

  std::size_t orbit_count() const { return orbit_sizes.size(); }
};

struct TransitivityReport
{
  int n = 0;
  TransitivityCheck vertex;
  TransitivityCheck edge;
  TransitivityCheck arc;
  TransitivityCheck distance; // all distances combined
  TransitivityCheck two_arc;
  std::vector<TransitivityCheck> distance_classes; // indexed by distance

  bool vertex_transitive() const { return vertex.holds; }
  bool edge_transitive() const { return edge.holds; }
  bool arc_transitive() const { return arc.holds; }
  bool distance_transitive() const { return distance.holds; }
  bool two_arc_transitive() const { return two_arc.holds; }

  /// arc ⟹ edge, 2-arc ⟹ arc, distance ⟹ arc (connected, diameter >= 1).
  bool implications_hold() const;
};

/// Orbit-closure analysis of a graph under a group of its automorphisms.
/// Construction rejects (std::invalid_argument) a group whose degree differs
/// from the vertex count or that has a non-automorphism generator.
class TransitivityAnalyzer
{
public:
  TransitivityAnalyzer(GeneratedGroup const &group, SimpleGraph const &graph);

  TransitivityCheck vertices() const;
  TransitivityCheck edges() const;
  TransitivityCheck arcs() const;
  TransitivityCheck distance_class(int d) const;
  TransitivityCheck distances() const;
  TransitivityCheck two_arcs() const;

  int graph_diameter() const { return _diameter; }

  /// Do a and b (ordered tuples) lie in one orbit?
  bool same_orbit(std::span<Vertex const> a, std::span<Vertex const> b) const;

  /// Same question for unordered edges {a0,a1} and {b0,b1}.
  bool same_edge_orbit(std::span<Vertex const> a, std::span<Vertex const> b) const;

private:
  TransitivityCheck partition(std::size_t arity,
                              std::vector<std::uint64_t> universe,
                              bool unordered_pairs) const;

  GeneratedGroup const &_group;
  SimpleGraph const &_graph;
  std::vector<std::vector<int>> _dist;
  int _diameter = 0;
};

TransitivityCheck is_vertex_transitive(GeneratedGroup const &grp, SimpleGraph const &g);
TransitivityCheck is_edge_transitive(GeneratedGroup const &grp, SimpleGraph const &g);
TransitivityCheck is_arc_transitive(GeneratedGroup const &grp, SimpleGraph const &g);
TransitivityCheck is_distance_transitive(GeneratedGroup const &grp, SimpleGraph const &g);
TransitivityCheck is_two_arc_transitive(GeneratedGroup const &grp, SimpleGraph const &g);

/// All five tests for a given group and graph.
TransitivityReport classify(GeneratedGroup const &grp, SimpleGraph const &g, int n = 0);

/// Builds Γ(n) and the claimed automorphism group, then classifies.
TransitivityReport classify(int n);

} // namespace csrg

#endif // CSRG_TRANSITIVITY_HPP
