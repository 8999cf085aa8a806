#include <set>

#include "circwidth/generate.hpp"
#include "circwidth/rng.hpp"
#include "doctest.h"

using namespace circwidth;

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(1);
  CHECK(rng.next() == 0x910a2dec89025cc1ULL);
  CHECK(rng.next() == 0xbeeb8da1658eec67ULL);
  CHECK(rng.next() == 0xf893a2eefb32555eULL);
  CHECK(rng.next() == 0x71c18690ee42c90bULL);

  SplitMix64 rng42(42);
  CHECK(rng42.next() == 0xbdd732262feb6e95ULL);

  SplitMix64 d(1);
  CHECK(d.next_double() == doctest::Approx(0.5665615751722809).epsilon(1e-15));
  CHECK(d.next_double() == doctest::Approx(0.7457817572627011).epsilon(1e-15));
  CHECK(d.next_double() == doctest::Approx(0.9710027535867962).epsilon(1e-15));

  SplitMix64 b(0xDEADBEEFULL);
  CHECK(b.below(10) == 7);
}

TEST_CASE("splitmix64 double range") {
  SplitMix64 rng(12345);
  for (int i = 0; i < 10000; ++i) {
    double x = rng.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("cycle family") {
  Digraph g = gen({Family::Cycle, 5, 1});
  CHECK(g.n == 5);
  CHECK(g.arcs == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_THROWS_AS(gen({Family::Cycle, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gen({Family::Cycle, 0, 1}), std::invalid_argument);
}

TEST_CASE("bidirected complete family") {
  Digraph g = gen({Family::BidirectedComplete, 4, 1});
  CHECK(g.m() == 12);
  std::vector<Arc> k4_edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4_edges.emplace_back(u, v);
  CHECK(g.arcs == to_bidirected(4, k4_edges).arcs);
  CHECK(gen({Family::BidirectedComplete, 1, 1}).m() == 0);
}

TEST_CASE("to_bidirected") {
  Digraph g = to_bidirected(3, {{0, 1}, {1, 2}});
  CHECK(g.arcs == std::vector<Arc>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(to_bidirected(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(to_bidirected(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(to_bidirected(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(to_bidirected(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("bidirected-from-undirected is symmetric and deterministic") {
  Digraph g = gen({Family::BidirectedFromUndirected, 8, 9});
  Digraph h = gen({Family::BidirectedFromUndirected, 8, 9});
  CHECK(g.arcs == h.arcs);
  for (auto [u, v] : g.arcs) CHECK(g.has_arc(v, u));
  CHECK(g.m() % 2 == 0);
}

TEST_CASE("random-scc frozen instances") {
  Digraph g = gen({Family::RandomScc, 5, 7});
  CHECK(g.arcs == std::vector<Arc>{{0, 1},
                                   {0, 2},
                                   {0, 4},
                                   {1, 0},
                                   {1, 2},
                                   {1, 3},
                                   {1, 4},
                                   {2, 0},
                                   {2, 1},
                                   {2, 3},
                                   {3, 4},
                                   {4, 1},
                                   {4, 2}});
  Digraph h = gen({Family::RandomScc, 4, 1});
  CHECK(h.arcs == std::vector<Arc>{
                      {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
}

TEST_CASE("random-scc is strongly connected and deterministic") {
  for (int n : {1, 2, 3, 5, 8, 16, 40}) {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      Digraph g = gen({Family::RandomScc, n, seed});
      CHECK(g.n == n);
      CHECK(is_strongly_connected(g));
      CHECK(g.arcs == gen({Family::RandomScc, n, seed}).arcs);
    }
  }
}

TEST_CASE("random-dag is acyclic and deterministic") {
  for (std::uint64_t seed : {1ULL, 7ULL, 123ULL}) {
    Digraph g = gen({Family::RandomDag, 10, seed});
    CHECK(g.arcs == gen({Family::RandomDag, 10, seed}).arcs);
    for (const auto& comp : strongly_connected_components(g).components)
      CHECK(comp.size() == 1);
  }
}

TEST_CASE("tournament orients every pair exactly once") {
  for (std::uint64_t seed : {1ULL, 5ULL}) {
    Digraph g = gen({Family::Tournament, 7, seed});
    CHECK(g.m() == 21);
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        CHECK((g.has_arc(u, v) ^ g.has_arc(v, u)));
    CHECK(g.arcs == gen({Family::Tournament, 7, seed}).arcs);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : all_families())
    CHECK(family_from_string(to_string(f)) == f);
  CHECK(to_string(Family::RandomScc) == std::string("random-scc"));
  CHECK(all_families().size() == 6);
  CHECK_THROWS_AS(family_from_string("moebius"), std::invalid_argument);
  CHECK_THROWS_AS(gen({Family::Tournament, 0, 1}), std::invalid_argument);
}
