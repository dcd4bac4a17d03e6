#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "csrg/brute_oracle.hpp"
#include "csrg/named_automorphisms.hpp"
#include "csrg/transitivity.hpp"

using namespace csrg;

namespace
{

struct Flags
{
  bool v, e, a, d, two;
};

void check_flags(TransitivityReport const &r, Flags f)
{
  CHECK(r.vertex_transitive() == f.v);
  CHECK(r.edge_transitive() == f.e);
  CHECK(r.arc_transitive() == f.a);
  CHECK(r.distance_transitive() == f.d);
  CHECK(r.two_arc_transitive() == f.two);
  CHECK(r.implications_hold());
}

GeneratedGroup brute_group(CayleyGraph const &g)
{
  return build_bsgs(enumerate_automorphisms(g).elements);
}

} // namespace

TEST_CASE("classification for n = 4..7")
{
  check_flags(classify(4), {true, false, false, false, false});
  check_flags(classify(5), {true, true, true, true, false});
  check_flags(classify(6), {true, false, false, false, false});
  check_flags(classify(7), {true, true, true, false, false});
}

TEST_CASE("Gamma(4) edge witnesses")
{
  auto g = build_gamma(4);
  auto grp = claimed_aut_group(g);
  TransitivityAnalyzer analyzer(grp, g);

  auto edges = analyzer.edges();
  REQUIRE_FALSE(edges.holds);
  REQUIRE(edges.witness.has_value());
  CHECK(edges.witness->first == std::vector<Vertex>{g.vertex(0, 0), g.vertex(0, 1)});
  CHECK(edges.witness->second == std::vector<Vertex>{g.vertex(0, 0), g.vertex(0, 2)});
  CHECK_FALSE(analyzer.same_edge_orbit(edges.witness->first, edges.witness->second));

  // The composite-n pair ((0,0),(m,0)) and ((0,0),(1,1)) with m = 2, in
  // both directions.
  std::vector<Vertex> e1{g.vertex(0, 0), g.vertex(2, 0)};
  std::vector<Vertex> e2{g.vertex(0, 0), g.vertex(1, 1)};
  std::vector<Vertex> e2_rev{g.vertex(1, 1), g.vertex(0, 0)};
  CHECK_FALSE(analyzer.same_orbit(e1, e2));
  CHECK_FALSE(analyzer.same_orbit(e1, e2_rev));
  CHECK_FALSE(analyzer.same_edge_orbit(e1, e2));
  // (2,0) lies in the orbit of the canonical second witness, (1,1) in the first.
  CHECK(analyzer.same_edge_orbit(e1, edges.witness->second));
  CHECK(analyzer.same_edge_orbit(e2, edges.witness->first));
}

TEST_CASE("composite n: ((0,0),(m,0)) and ((0,0),(1,1)) are in distinct orbits")
{
  for (int n : {6, 8, 9, 10}) {
    auto g = build_gamma(n);
    auto grp = claimed_aut_group(g);
    TransitivityAnalyzer analyzer(grp, g);
    int m = smallest_proper_factor(n);
    std::vector<Vertex> e1{g.vertex(0, 0), g.vertex(m, 0)};
    std::vector<Vertex> e2{g.vertex(0, 0), g.vertex(1, 1)};
    REQUIRE_FALSE(analyzer.same_edge_orbit(e1, e2));
  }
}

TEST_CASE("arc-transitivity for primes")
{
  auto r5 = classify(5);
  CHECK(r5.arc.orbit_sizes == std::vector<std::size_t>{300});
  auto r7 = classify(7);
  CHECK(r7.arc.orbit_sizes == std::vector<std::size_t>{49 * 18});
}

TEST_CASE("arc orbit sizes sum to n^2(3n-3)")
{
  for (int n = 4; n <= 10; ++n) {
    auto r = classify(n);
    auto total = std::accumulate(r.arc.orbit_sizes.begin(), r.arc.orbit_sizes.end(),
                                 std::size_t{0});
    REQUIRE(total == static_cast<std::size_t>(n * n * (3 * n - 3)));
    REQUIRE(r.arc.class_size == total);
    REQUIRE(r.implications_hold());
  }
}

TEST_CASE("Gamma(7) distance-2 pairs split")
{
  auto g = build_gamma(7);
  auto grp = claimed_aut_group(g);
  TransitivityAnalyzer analyzer(grp, g);
  auto d2 = analyzer.distance_class(2);
  REQUIRE_FALSE(d2.holds);
  CHECK(d2.orbit_count() == 2);
  CHECK(d2.witness->first == std::vector<Vertex>{g.vertex(0, 0), g.vertex(1, 2)});
  CHECK(d2.witness->second == std::vector<Vertex>{g.vertex(0, 0), g.vertex(1, 3)});

  std::vector<Vertex> p{g.vertex(0, 0), g.vertex(2, 3)};
  std::vector<Vertex> q{g.vertex(0, 0), g.vertex(4, 2)};
  REQUIRE(g.bfs_distances(0)[p[1]] == 2);
  REQUIRE(g.bfs_distances(0)[q[1]] == 2);
  CHECK_FALSE(analyzer.same_orbit(p, q));
}

TEST_CASE("Gamma(5) is distance-transitive but not 2-arc-transitive")
{
  auto g = build_gamma(5);
  auto grp = claimed_aut_group(g);
  TransitivityAnalyzer analyzer(grp, g);

  for (int d = 0; d <= 2; ++d)
    REQUIRE(analyzer.distance_class(d).holds);

  auto two = analyzer.two_arcs();
  REQUIRE_FALSE(two.holds);
  CHECK(two.class_size == 25 * 12 * 11);
  CHECK(two.orbit_count() == 7);

  // (0,0) ~ (0,1) ~ (2,3) and (0,0) ~ (2,2) ~ (4,2).
  std::vector<Vertex> p1{g.vertex(0, 0), g.vertex(0, 1), g.vertex(2, 3)};
  std::vector<Vertex> p2{g.vertex(0, 0), g.vertex(2, 2), g.vertex(4, 2)};
  REQUIRE(g.is_adjacent(p1[0], p1[1]));
  REQUIRE(g.is_adjacent(p1[1], p1[2]));
  REQUIRE(g.is_adjacent(p2[0], p2[1]));
  REQUIRE(g.is_adjacent(p2[1], p2[2]));
  CHECK_FALSE(analyzer.same_orbit(p1, p2));
  CHECK_FALSE(analyzer.same_orbit(two.witness->first, two.witness->second));
}

TEST_CASE("stabilizer of (0,0) is transitive on the non-neighbours in Gamma(5)")
{
  auto g = build_gamma(5);
  auto stab = claimed_stabilizer_zero(g);
  auto orbit = stab.orbit_of_point(g.vertex(1, 2));
  CHECK(orbit.size() == 12);
  for (Vertex v : orbit)
    REQUIRE(g.bfs_distances(0)[v] == 2);
}

TEST_CASE("full automorphism group and claimed group classify alike")
{
  for (int n : {4, 5, 6}) {
    auto g = build_gamma(n);
    auto brute = brute_group(g);
    auto claimed = claimed_aut_group(g);
    auto a = classify(brute, g, n);
    auto b = classify(claimed, g, n);
    REQUIRE(a.vertex.orbit_sizes == b.vertex.orbit_sizes);
    REQUIRE(a.edge.orbit_sizes == b.edge.orbit_sizes);
    REQUIRE(a.arc.orbit_sizes == b.arc.orbit_sizes);
    REQUIRE(a.distance.orbit_sizes == b.distance.orbit_sizes);
    REQUIRE(a.two_arc.orbit_sizes == b.two_arc.orbit_sizes);
  }
}

TEST_CASE("smaller groups are detected as less transitive")
{
  auto g = build_gamma(5);
  auto translations = translation_group(g);
  auto r = classify(translations, g, 5);
  CHECK(r.vertex_transitive());
  CHECK_FALSE(r.edge_transitive());
  CHECK(r.arc.orbit_count() == 12);

  auto l = clique_permuting_group(g);
  CHECK_FALSE(is_vertex_transitive(l, g).holds);
}

TEST_CASE("analyzer rejections")
{
  auto g = build_gamma(4);
  std::vector<Vertex> images(16);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::swap(images[1], images[2]);
  std::swap(images[4], images[5]);
  auto bogus = build_bsgs({Permutation(images)});
  REQUIRE_FALSE(is_graph_automorphism(g, Permutation(images)));
  CHECK_THROWS_AS(TransitivityAnalyzer(bogus, g), std::invalid_argument);

  auto wrong_degree = claimed_aut_group(5);
  CHECK_THROWS_AS(TransitivityAnalyzer(wrong_degree, g), std::invalid_argument);

  auto disconnected = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
  auto swap_halves = build_bsgs({Permutation({2, 3, 0, 1})});
  CHECK_THROWS_AS(TransitivityAnalyzer(swap_halves, disconnected), std::invalid_argument);
}
