#include <sstream>

#include "circwidth/digraph.hpp"
#include "circwidth/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circwidth;

namespace {
Digraph c3() { return Digraph::make(3, {{0, 1}, {1, 2}, {2, 0}}); }
}  // namespace

TEST_CASE("digraph construction canonicalizes and validates") {
  Digraph g = Digraph::make(3, {{2, 0}, {0, 1}, {1, 2}});
  CHECK(g.arcs == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.out[0] == std::vector<int>{1});
  CHECK(g.in[0] == std::vector<int>{2});
  CHECK(g.has_arc(2, 0));
  CHECK_FALSE(g.has_arc(0, 2));

  CHECK_THROWS_AS(Digraph::make(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::make(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::make(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::make(-1, {}), std::invalid_argument);
}

TEST_CASE("edge-list parsing accepts comments and blank lines") {
  std::string text =
      "# a triangle\n"
      "\n"
      "3 3\n"
      "0 1\n"
      "  # interior comment\n"
      "1 2\n"
      "2 0\n";
  Digraph g = parse_digraph(text);
  CHECK(g.n == 3);
  CHECK(g.arcs == c3().arcs);
}

TEST_CASE("edge-list round trip is byte identical") {
  Digraph g = Digraph::make(4, {{3, 1}, {0, 2}, {1, 0}});
  std::string text = serialize_digraph(g);
  CHECK(text == "4 3\n0 2\n1 0\n3 1\n");
  CHECK(serialize_digraph(parse_digraph(text)) == text);
}

TEST_CASE("parse errors name the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_digraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  // malformed header
  CHECK(line_of("3\n") == 1);
  // malformed arc line
  CHECK(line_of("2 1\n0 x\n") == 2);
  CHECK(line_of("2 1\n0 1 9\n") == 2);
  // out of range
  CHECK(line_of("2 1\n0 2\n") == 2);
  CHECK(line_of("# c\n2 1\n-1 0\n") == 3);
  // self-loop
  CHECK(line_of("2 1\n1 1\n") == 2);
  // duplicate
  CHECK(line_of("2 2\n0 1\n0 1\n") == 3);
  // count mismatches
  CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
  CHECK(line_of("2 2\n0 1\n") == 1);
  CHECK(line_of("") == 0);

  CHECK_THROWS_WITH_AS(parse_digraph("2 1\n1 1\n"),
                       "line 2: self-loop at vertex 1", ParseError);
}

TEST_CASE("induced subgraph relabels ascending") {
  // Triangle restricted to {0, 2}: only (2, 0) survives, locally (1, 0).
  auto sub = induced_subgraph(c3(), {2, 0});
  CHECK(sub.vertices == std::vector<int>{0, 2});
  CHECK(sub.graph.n == 2);
  CHECK(sub.graph.arcs == std::vector<Arc>{{1, 0}});

  CHECK_THROWS_AS(induced_subgraph(c3(), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(c3(), {3}), std::invalid_argument);
}

TEST_CASE("scc of a triangle is a single component") {
  auto p = strongly_connected_components(c3());
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0] == std::vector<int>{0, 1, 2});
  CHECK(p.component_of == std::vector<int>{0, 0, 0});
  CHECK(is_strongly_connected(c3()));
}

TEST_CASE("scc components come out in reverse topological order") {
  // Two triangles joined by the arc (0, 3): the head's component first.
  Digraph g = Digraph::make(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  auto p = strongly_connected_components(g);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0] == std::vector<int>{3, 4, 5});
  CHECK(p.components[1] == std::vector<int>{0, 1, 2});
  CHECK_FALSE(is_strongly_connected(g));
}

TEST_CASE("scc matches the brute-force partition on random graphs") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(7));
    double p = 0.05 + 0.1 * static_cast<double>(rng.below(9));
    Digraph g = oracles::random_digraph(n, p, rng);
    auto part = strongly_connected_components(g);

    std::set<std::vector<int>> got(part.components.begin(),
                                   part.components.end());
    CHECK(got == oracles::scc_brute(g));
    for (size_t i = 0; i < part.components.size(); ++i)
      for (int v : part.components[i])
        CHECK(part.component_of[v] == static_cast<int>(i));
    // Reverse topological: cross arcs point to earlier components.
    for (auto [u, v] : g.arcs)
      if (part.component_of[u] != part.component_of[v])
        CHECK(part.component_of[v] < part.component_of[u]);
  }
}

TEST_CASE("directed union forbids arcs from the second part to the first") {
  Digraph g = Digraph::make(2, {{0, 1}});
  CHECK(is_directed_union(g, {0}, {1}));
  Digraph h = Digraph::make(2, {{1, 0}});
  CHECK_FALSE(is_directed_union(h, {0}, {1}));
  // Shared vertices are allowed and never forbidden.
  CHECK(is_directed_union(h, {0, 1}, {1}));
  CHECK_THROWS_AS(is_directed_union(g, {0}, {0}), std::invalid_argument);
}

TEST_CASE("scc order yields directed unions at every split") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(7));
    Digraph g = oracles::random_digraph(n, 0.25, rng);
    auto part = strongly_connected_components(g);
    for (size_t t = 1; t < part.components.size(); ++t) {
      std::vector<int> sink_side, source_side;
      for (size_t i = 0; i < part.components.size(); ++i) {
        auto& side = i < t ? sink_side : source_side;
        side.insert(side.end(), part.components[i].begin(),
                    part.components[i].end());
      }
      CHECK(is_directed_union(g, source_side, sink_side));
    }
  }
}
