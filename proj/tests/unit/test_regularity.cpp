#include <doctest.h>

#include "csrg/cayley_graph.hpp"
#include "csrg/regularity.hpp"

using namespace csrg;

namespace
{

// Common neighbours of (0,0) and p counted as #{s ∈ S : s - p ∈ S}.
long long s_enumeration(ConnectionSet const &s, ZnPair const &p)
{
  long long count = 0;
  for (auto const &a : s.members()) {
    if (s.contains(pair_sub(a, p)))
      ++count;
  }
  return count;
}

} // namespace

TEST_CASE("Gamma(4) and Gamma(5) parameters")
{
  auto p4 = check_strongly_regular(build_gamma(4));
  REQUIRE(p4.ok());
  CHECK(p4.value() == SrgParams{16, 9, 4, 6});

  auto p5 = check_strongly_regular(build_gamma(5));
  REQUIRE(p5.ok());
  CHECK(p5.value() == SrgParams{25, 12, 5, 6});
}

TEST_CASE("strong regularity for n = 4..12")
{
  for (long long n = 4; n <= 12; ++n) {
    auto g = build_gamma(static_cast<int>(n));
    auto p = check_strongly_regular(g);
    REQUIRE(p.ok());
    REQUIRE(p.value() == SrgParams{n * n, 3 * n - 3, n, 6});
    REQUIRE(p.value().feasible());

    // λ and μ cross-checked by enumerating S.
    auto const &s = g.connection();
    REQUIRE(s_enumeration(s, ZnPair(static_cast<int>(n), 1, 0)) == n);
    REQUIRE(s_enumeration(s, ZnPair(static_cast<int>(n), 1, 2)) == 6);
  }
}

TEST_CASE("intersection arrays")
{
  auto a4 = intersection_array(build_gamma(4));
  REQUIRE(a4.ok());
  CHECK(a4.value() == IntersectionArray{{9, 4}, {1, 6}});
  CHECK(a4.value().to_string() == "{9, 4; 1, 6}");

  for (long long n = 4; n <= 12; ++n) {
    auto g = build_gamma(static_cast<int>(n));
    auto a = intersection_array(g);
    REQUIRE(a.ok());
    REQUIRE(a.value() == IntersectionArray{{3 * n - 3, 2 * n - 4}, {1, 6}});
    REQUIRE(a.value().diameter() == 2);

    auto p = check_strongly_regular(g).value();
    REQUIRE(a.value() == IntersectionArray{{p.k, p.k - p.lambda - 1}, {1, p.mu}});
  }
}

TEST_CASE("refusals")
{
  SimpleGraph broken = build_gamma(4);
  broken.remove_edge(0, 1);
  auto srg = check_strongly_regular(broken);
  CHECK_FALSE(srg.ok());
  CHECK_FALSE(srg.refusal().reason.empty());
  CHECK_FALSE(intersection_array(broken).ok());
  CHECK_THROWS_AS(srg.value(), std::logic_error);

  SimpleGraph disconnected = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(check_strongly_regular(disconnected).ok());
  CHECK_FALSE(diameter(disconnected).ok());
  CHECK_FALSE(intersection_array(disconnected).ok());

  SimpleGraph complete = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(check_strongly_regular(complete).ok());
}

TEST_CASE("distance-regular controls")
{
  // 6-cycle: {2, 1, 1; 1, 1, 2}, regular but not strongly regular.
  SimpleGraph c6 = SimpleGraph::from_edges(
    6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto a = intersection_array(c6);
  REQUIRE(a.ok());
  CHECK(a.value() == IntersectionArray{{2, 1, 1}, {1, 1, 2}});
  auto srg = check_strongly_regular(c6);
  CHECK_FALSE(srg.ok());
  CHECK(srg.refusal().witness.has_value());

  // Petersen graph is (10, 3, 0, 1).
  SimpleGraph petersen(10);
  for (Vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  auto pp = check_strongly_regular(petersen);
  REQUIRE(pp.ok());
  CHECK(pp.value() == SrgParams{10, 3, 0, 1});
}

TEST_CASE("diameter")
{
  CHECK(diameter(build_gamma(4)).value() == 2);
  CHECK(diameter(build_gamma(12)).value() == 2);
  CHECK(diameter(SimpleGraph(1)).value() == 0);

  auto d = distance_matrix(build_gamma(5));
  CHECK(d[0][0] == 0);
  CHECK(d[0][13] == 2); // (2,3)
}
