#include "circwidth/cycles.hpp"
#include "circwidth/generate.hpp"
#include "circwidth/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circwidth;

TEST_CASE("circumference of directed cycles") {
  for (int n = 2; n <= 10; ++n) {
    auto r = circumference(gen({Family::Cycle, n, 1}));
    CHECK(r.length == n);
    REQUIRE(static_cast<int>(r.witness.size()) == n);
    CHECK(r.witness[0] == 0);
    CHECK(is_simple_cycle(gen({Family::Cycle, n, 1}), r.witness));
  }
}

TEST_CASE("circumference of a triangle with witness") {
  Digraph g = Digraph::make(3, {{0, 1}, {1, 2}, {2, 0}});
  auto r = circumference(g);
  CHECK(r.length == 3);
  CHECK(r.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("acyclic graphs have circumference 1 and no witness") {
  Digraph g = Digraph::make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto r = circumference(g);
  CHECK(r.length == 1);
  CHECK(r.witness.empty());
  CHECK(circumference(Digraph::make(0, {})).length == 1);
  CHECK(circumference(Digraph::make(5, {})).length == 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto dag = gen({Family::RandomDag, 2 + trial % 9, 500 + (unsigned)trial});
    CHECK(circumference(dag).length == 1);
  }
}

TEST_CASE("circumference is the max over components") {
  // A 2-cycle next to a 3-cycle.
  Digraph g = Digraph::make(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto r = circumference(g);
  CHECK(r.length == 3);
  CHECK(r.witness == std::vector<int>{2, 3, 4});
}

TEST_CASE("circumference of bidirected cliques is n") {
  for (int n = 3; n <= 6; ++n) {
    auto r = circumference(gen({Family::BidirectedComplete, n, 1}));
    CHECK(r.length == n);
    CHECK(is_simple_cycle(gen({Family::BidirectedComplete, n, 1}), r.witness));
  }
}

TEST_CASE("bidirected edges alone give circumference 2") {
  Digraph g = Digraph::make(2, {{0, 1}, {1, 0}});
  auto r = circumference(g);
  CHECK(r.length == 2);
  CHECK(r.witness == std::vector<int>{0, 1});
}

TEST_CASE("the subset-permutation oracle enforces its size limit") {
  CHECK(circumference_oracle(Digraph::make(3, {{0, 1}, {1, 2}, {2, 0}})) == 3);
  CHECK(circumference_oracle(Digraph::make(4, {{0, 1}, {1, 0}})) == 2);
  CHECK(circumference_oracle(Digraph::make(3, {{0, 1}})) == 1);
  CHECK_THROWS_AS(circumference_oracle(Digraph::make(10, {})),
                  std::invalid_argument);
}

TEST_CASE("search agrees with the oracle on random graphs up to n = 8") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    double p = 0.1 + 0.1 * static_cast<double>(rng.below(8));
    Digraph g = oracles::random_digraph(n, p, rng);
    auto r = circumference(g);
    CHECK(r.length == circumference_oracle(g));
    if (r.length >= 2) {
      CHECK(is_simple_cycle(g, r.witness));
      CHECK(static_cast<int>(r.witness.size()) == r.length);
    } else {
      CHECK(r.witness.empty());
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  Digraph g = gen({Family::RandomScc, 8, 12345});
  auto a = circumference(g);
  auto b = circumference(g);
  CHECK(a.length == b.length);
  CHECK(a.witness == b.witness);
}

TEST_CASE("the scc size guard refuses oversized components") {
  auto big = gen({Family::Cycle, 21, 1});
  CHECK_THROWS_AS(circumference(big), SizeGuardError);
  CHECK(circumference(big, 31).length == 21);
  // Many small components are fine regardless of total size.
  std::vector<Arc> arcs;
  for (int i = 0; i < 30; i += 2) {
    arcs.push_back({i, i + 1});
    arcs.push_back({i + 1, i});
  }
  CHECK(circumference(Digraph::make(30, arcs)).length == 2);
  CHECK_THROWS_AS(circumference(big, 0), std::invalid_argument);
  CHECK_THROWS_AS(circumference(big, 32), std::invalid_argument);
}

TEST_CASE("is_simple_cycle rejects degenerate sequences") {
  Digraph g = Digraph::make(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(is_simple_cycle(g, {}));
  CHECK_FALSE(is_simple_cycle(g, {0}));
  CHECK_FALSE(is_simple_cycle(g, {0, 1}));       // no closing arc
  CHECK_FALSE(is_simple_cycle(g, {0, 1, 1}));    // repeated vertex
  CHECK_FALSE(is_simple_cycle(g, {0, 1, 3}));    // out of range
  CHECK(is_simple_cycle(g, {1, 2, 0}));
}
