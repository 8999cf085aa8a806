#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circwidth/digraph.hpp"

namespace circwidth {

// Graph families. All randomized families are driven by SplitMix64 and are
// fully determined by (family, n, seed); the draw order is fixed and
// documented in generate.cpp so the instances can be reproduced outside
// this library.
enum class Family {
  Cycle,                    // directed n-cycle, n >= 2
  BidirectedComplete,       // both orientations of every K_n edge
  BidirectedFromUndirected, // both orientations of a G(n, 1/2) graph
  RandomScc,                // G(n, p) retried until strongly connected
  RandomDag,                // random order, forward arcs with p = 0.3
  Tournament,               // one random orientation per pair
};

const char* to_string(Family f);
Family family_from_string(const std::string& s);
std::vector<Family> all_families();

struct FamilySpec {
  Family family = Family::Cycle;
  int n = 0;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument for sizes a family cannot produce (n < 1,
// or n < 2 for cycles) and std::runtime_error if RandomScc exhausts its
// retry budget.
Digraph gen(const FamilySpec& spec);

// Both orientations of each undirected edge. Edges may be written in either
// order; self-loops and duplicate edges (in any orientation) throw
// std::invalid_argument.
Digraph to_bidirected(int n, const std::vector<Arc>& undirected_edges);

}  // namespace circwidth
