#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "circwidth/digraph.hpp"

namespace circwidth {

// Longest simple directed cycle. By convention a graph with no cycle (every
// SCC trivial) has circumference 1 and an empty witness; otherwise `witness`
// lists the cycle's vertices in order, starting at its smallest vertex id.
struct CircumferenceResult {
  int length = 1;
  std::vector<int> witness;
};

// Exact circumference is exponential in the worst case; refuse SCCs larger
// than this by default so a stray input cannot hang the tool.
inline constexpr int kCircumferenceSccGuard = 20;

class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what);
};

// Exact circumference via per-SCC backtracking over bitmasks, with
// reachability pruning and an upper-bound cutoff. Cycles are enumerated
// anchored at their smallest vertex so no cycle is explored twice. Throws
// SizeGuardError if any SCC exceeds scc_size_guard (must be <= 31).
CircumferenceResult circumference(const Digraph& g,
                                  int scc_size_guard = kCircumferenceSccGuard);

// Independent oracle for tests: enumerates every vertex subset and every
// rotation-canonical permutation. Only for n <= 9 (throws above that).
int circumference_oracle(const Digraph& g);

// True iff `cycle` lists >= 2 distinct vertices forming a simple directed
// cycle of g (consecutive arcs plus the closing arc all present).
bool is_simple_cycle(const Digraph& g, const std::vector<int>& cycle);

}  // namespace circwidth
