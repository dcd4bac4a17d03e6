#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "csrg/brute_oracle.hpp"
#include "csrg/named_automorphisms.hpp"
#include "csrg/perm_group.hpp"

using namespace csrg;

namespace
{

Permutation cycle_shift(std::size_t degree)
{
  std::vector<Vertex> images(degree);
  for (std::size_t v = 0; v < degree; ++v)
    images[v] = static_cast<Vertex>((v + 1) % degree);
  return Permutation(std::move(images));
}

Permutation reflection(std::size_t degree)
{
  std::vector<Vertex> images(degree);
  for (std::size_t v = 0; v < degree; ++v)
    images[v] = static_cast<Vertex>((degree - v) % degree);
  return Permutation(std::move(images));
}

Permutation transposition(std::size_t degree, Vertex a, Vertex b)
{
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

void check_orbit_stabilizer(GeneratedGroup const &g)
{
  for (Vertex v = 0; v < g.degree(); ++v) {
    auto stab = g.point_stabilizer(v);
    REQUIRE(g.order() == BigInt(g.orbit_of_point(v).size()) * stab.order());
  }
}

} // namespace

TEST_CASE("trivial group")
{
  auto g = build_bsgs({Permutation::identity(16)});
  CHECK(g.order() == 1);
  CHECK(g.contains(Permutation::identity(16)));
  CHECK(g.orbit_of_point(3) == std::vector<Vertex>{3});
  CHECK(g.point_stabilizer(5).order() == 1);

  Vertex tuple[] = {0, 5};
  auto orbit = g.orbit_of_tuple(tuple);
  CHECK(orbit.size() == 1);
  CHECK(orbit.min() == std::vector<Vertex>{0, 5});
}

TEST_CASE("build rejects bad input")
{
  CHECK_THROWS_AS(GeneratedGroup::build({}), std::invalid_argument);
  CHECK_THROWS_AS(build_bsgs({Permutation::identity(3), Permutation::identity(4)}),
                  std::invalid_argument);

  auto g = build_bsgs({cycle_shift(5)});
  CHECK_THROWS_AS(g.contains(Permutation::identity(6)), std::invalid_argument);
  CHECK_THROWS_AS(g.orbit_of_point(5), std::out_of_range);
  CHECK_THROWS_AS(g.point_stabilizer(9), std::out_of_range);
  Vertex bad[] = {1, 7};
  CHECK_THROWS_AS(g.orbit_of_tuple(bad), std::out_of_range);
  Vertex too_long[] = {0, 1, 2, 3};
  CHECK_THROWS_AS(g.orbit_of_tuple(too_long), std::invalid_argument);
}

TEST_CASE("symmetric group S5 from a transposition and a 5-cycle")
{
  auto g = build_bsgs({transposition(5, 0, 1), cycle_shift(5)});
  CHECK(g.order() == 120);
  CHECK(g.verify_chain());

  auto elements = g.elements();
  CHECK(elements.size() == 120);
  CHECK(std::set<Permutation>(elements.begin(), elements.end()).size() == 120);

  // 2 is not the first base point, so this exercises the rebuild path.
  auto stab = g.point_stabilizer(2);
  CHECK(stab.order() == 24);
  for (auto const &p : stab.elements())
    CHECK(p[2] == 2);
  check_orbit_stabilizer(g);
}

TEST_CASE("dihedral group above the explicit transversal limit")
{
  constexpr std::size_t degree = 2600;
  auto g = build_bsgs({cycle_shift(degree), reflection(degree)});
  CHECK(g.order() == 2 * degree);
  CHECK(g.verify_chain());
  CHECK(g.contains(compose(cycle_shift(degree), reflection(degree))));
  CHECK_FALSE(g.contains(transposition(degree, 0, 1)));
  CHECK(g.point_stabilizer(0).order() == 2);
  CHECK(g.point_stabilizer(17).order() == 2);
}

TEST_CASE("L = <sigma, alpha> has order 6 and the stated relations, n = 4..30")
{
  for (int n = 4; n <= 30; ++n) {
    auto gamma = build_gamma(n);
    auto sigma = sigma_perm(gamma).perm();
    auto alpha = alpha_perm(gamma).perm();
    auto id = Permutation::identity(gamma.vertex_count());

    REQUIRE(build_bsgs({sigma, alpha}).order() == 6);
    REQUIRE(compose(sigma, sigma) == id);
    REQUIRE(compose(alpha, compose(alpha, alpha)) == id);
    REQUIRE(compose(sigma, compose(alpha, sigma)) == compose(alpha, alpha));
  }
}

TEST_CASE("K = <psi_u> on Gamma(5) has order phi(5) = 4")
{
  auto gamma = build_gamma(5);
  std::vector<Permutation> gens;
  for (int u : {1, 2, 3, 4})
    gens.push_back(psi(gamma, u).perm());
  CHECK(build_bsgs(gens).order() == 4);
}

TEST_CASE("claimed group orders agree with brute-force enumeration")
{
  // Expected values come from the backtracking oracle, not from the chain.
  for (int n : {4, 5}) {
    auto gamma = build_gamma(n);
    auto brute = enumerate_automorphisms(gamma);
    auto group = claimed_aut_group(gamma);
    CHECK(group.order() == brute.elements.size());
  }
  CHECK(claimed_aut_group(5).order() == 600);
  CHECK(claimed_aut_group(4).order() == 192);
}

TEST_CASE("membership")
{
  auto gamma = build_gamma(4);
  auto group = claimed_aut_group(gamma);
  CHECK(group.contains(Permutation::identity(16)));
  CHECK(group.contains(translation(gamma, 1, 1).perm()));

  auto sigma = sigma_perm(gamma).perm();
  auto alpha = alpha_perm(gamma).perm();
  // |<sigma>| = 2 and alpha is neither id nor sigma.
  REQUIRE(alpha != sigma);
  REQUIRE(!alpha.is_identity());
  CHECK_FALSE(build_bsgs({sigma}).contains(alpha));

  // A transposition of vertices is no automorphism, hence not a member.
  CHECK_FALSE(group.contains(transposition(16, 4, 8)));
}

TEST_CASE("products of up to three generators are members")
{
  std::mt19937 rng(2024);
  for (int n : {4, 6, 9}) {
    auto group = claimed_aut_group(n);
    auto const &gens = group.generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Permutation p = gens[pick(rng)];
      int extra = trial % 3;
      for (int k = 0; k < extra; ++k)
        p = compose(p, gens[pick(rng)]);
      REQUIRE(group.contains(p));
      REQUIRE(group.contains(inverse(p)));
    }
  }
}

TEST_CASE("point orbits")
{
  auto g4 = build_gamma(4);
  auto orbit = claimed_aut_group(g4).orbit_of_point(0);
  CHECK(orbit.size() == 16);

  auto k4 = build_bsgs({psi(g4, 1).perm(), psi(g4, 3).perm()});
  Vertex v10 = g4.vertex(1, 0);
  // psi_1(1,0) = (1,0), psi_3(1,0) = (3,0).
  CHECK(k4.orbit_of_point(v10) == std::vector<Vertex>{g4.vertex(1, 0), g4.vertex(3, 0)});
}

TEST_CASE("point stabilizers of the claimed group")
{
  auto g5 = claimed_aut_group(5);
  CHECK(g5.point_stabilizer(0).order() == 24);

  auto gamma4 = build_gamma(4);
  auto brute = enumerate_automorphisms(gamma4);
  auto fixing_zero = std::count_if(brute.elements.begin(), brute.elements.end(),
                                   [](Permutation const &p) { return p[0] == 0; });
  REQUIRE(fixing_zero == 12);
  CHECK(claimed_aut_group(gamma4).point_stabilizer(0).order() == 12);
}

TEST_CASE("tuple orbits on arcs")
{
  auto gamma5 = build_gamma(5);
  Vertex arc5[] = {0, gamma5.vertex(1, 0)};
  CHECK(claimed_aut_group(gamma5).orbit_of_tuple(arc5).size() == 300);

  auto gamma4 = build_gamma(4);
  Vertex arc4[] = {0, gamma4.vertex(2, 0)};
  auto orbit = claimed_aut_group(gamma4).orbit_of_tuple(arc4);
  CHECK(orbit.size() < 144);
  for (auto const &t : orbit.members())
    REQUIRE(gamma4.is_adjacent(t[0], t[1]));
}

TEST_CASE("orbit-stabilizer identity holds at every point")
{
  check_orbit_stabilizer(claimed_aut_group(4));
  check_orbit_stabilizer(claimed_stabilizer_zero(5));
  check_orbit_stabilizer(build_bsgs({translation(6, 1, 0).perm()}));
}

TEST_CASE("rebuilding is deterministic")
{
  for (int n : {4, 7, 12}) {
    auto a = claimed_aut_group(n);
    auto b = claimed_aut_group(n);
    REQUIRE(a.base() == b.base());
    REQUIRE(a.order() == b.order());
    REQUIRE(a.strong_generators() == b.strong_generators());
    REQUIRE(a.verify_chain());
  }
}

TEST_CASE("element enumeration matches brute force at n = 4")
{
  auto gamma = build_gamma(4);
  auto elements = claimed_aut_group(gamma).elements();
  auto brute = enumerate_automorphisms(gamma);
  CHECK(elements == brute.elements);
  CHECK_THROWS_AS(claimed_aut_group(gamma).elements(10), std::length_error);
}

TEST_CASE("claimed group of Gamma(51) uses Schreier vectors")
{
  // 51^2 = 2601 points.
  auto group = claimed_aut_group(51);
  CHECK(group.order() == BigInt(6) * 51 * 51 * euler_phi(51));
  CHECK(group.verify_chain());
  CHECK(group.point_stabilizer(0).order() == 6 * euler_phi(51));
}
