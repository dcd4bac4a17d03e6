#include <doctest.h>

#include <regex>
#include <sstream>
#include <stdexcept>

#include "csrg/export.hpp"
#include "csrg/regularity.hpp"

using namespace csrg;

TEST_CASE("graph6 reference encodings")
{
  // Worked example from the format description: n = 5, edges 0-2 0-4 1-3 3-4.
  auto g = SimpleGraph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  CHECK(encode_graph6(g) == "DQc");
  CHECK(decode_graph6("DQc") == g);

  // The Petersen graph as commonly distributed.
  auto petersen = decode_graph6("IheA@GUAo");
  CHECK(petersen.vertex_count() == 10);
  CHECK(check_strongly_regular(petersen).value() == SrgParams{10, 3, 0, 1});

  CHECK(encode_graph6(SimpleGraph(1)) == "@");
  CHECK(encode_graph6(SimpleGraph(0)) == "?");
}

TEST_CASE("graph6 of Gamma(n)")
{
  auto g4 = build_gamma(4);
  auto s4 = encode_graph6(g4);
  CHECK(s4.front() == 'O');
  // 120 upper-triangle bits in 20 groups.
  CHECK(s4.size() == 1 + 20);

  auto g5 = build_gamma(5);
  CHECK(decode_graph6(encode_graph6(g5)) == static_cast<SimpleGraph const &>(g5));

  // 64 vertices needs the long size form: '~' then three 6-bit groups.
  auto g8 = build_gamma(8);
  auto s8 = encode_graph6(g8);
  CHECK(s8.substr(0, 4) == std::string{'~', 63, 64, 63});
  CHECK(decode_graph6(s8) == static_cast<SimpleGraph const &>(g8));

  CHECK(decode_graph6(">>graph6<<" + s4 + "\n") == static_cast<SimpleGraph const &>(g4));
}

TEST_CASE("graph6 round trip over the accepted range")
{
  for (int n : {4, 7, 10, 11, 20}) {
    auto g = build_gamma(n);
    REQUIRE(decode_graph6(encode_graph6(g)) == static_cast<SimpleGraph const &>(g));
  }
}

TEST_CASE("malformed graph6")
{
  CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("D"), std::invalid_argument);   // truncated
  CHECK_THROWS_AS(decode_graph6("DQc?"), std::invalid_argument); // trailing data
  CHECK_THROWS_AS(decode_graph6("D Qc"), std::invalid_argument);
}

TEST_CASE("DOT output of Gamma(4)")
{
  auto dot = to_dot(build_gamma(4));
  std::istringstream in(dot);
  std::string line;
  std::getline(in, line);
  CHECK(line == "graph Gamma_4 {");

  std::regex node(R"re(^  \d+ \[label="\(\d+,\d+\)"\];$)re");
  std::regex edge(R"(^  \d+ -- \d+;$)");
  int nodes = 0, edges = 0;
  while (std::getline(in, line)) {
    if (std::regex_match(line, node))
      ++nodes;
    else if (std::regex_match(line, edge))
      ++edges;
  }
  CHECK(nodes == 16);
  CHECK(edges == 72);
  CHECK(dot.find("label=\"(2,3)\"") != std::string::npos);
}
