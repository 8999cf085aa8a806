#include "circwidth/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace circwidth {

SizeGuardError::SizeGuardError(const std::string& what)
    : std::runtime_error(what) {}

namespace {

using Mask = std::uint32_t;

// Vertices reachable from `start` walking only inside `allowed`.
Mask reachable(const std::vector<Mask>& out, int start, Mask allowed) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    Mask f = frontier;
    while (f) {
      int x = std::countr_zero(f);
      f &= f - 1;
      next |= out[x] & allowed;
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

// Longest cycle within one SCC (local ids 0..k-1). Cycles are anchored at
// their smallest member: for anchor a only vertices >= a are allowed, so
// each cycle is generated from exactly one root of the search. Two prunes
// keep this fast at desk scale: a branch dies if the anchor is unreachable
// through unused vertices, and if path length plus reachable unused
// vertices cannot beat the best.
struct SccSearch {
  const std::vector<Mask>& out;
  int k;
  int anchor = 0;
  Mask allowed = 0;
  std::vector<int> path = {};
  int best = 1;
  std::vector<int> best_path = {};

  void run() {
    for (anchor = 0; anchor < k; ++anchor) {
      allowed = 0;
      for (int v = anchor; v < k; ++v) allowed |= Mask{1} << v;
      path.assign(1, anchor);
      extend(anchor, Mask{1} << anchor);
    }
  }

  void extend(int x, Mask used) {
    Mask cand = out[x] & allowed;
    Mask c = cand;
    while (c) {
      int y = std::countr_zero(c);
      c &= c - 1;
      if (y == anchor) {
        if (static_cast<int>(path.size()) >= 2 &&
            static_cast<int>(path.size()) > best) {
          best = static_cast<int>(path.size());
          best_path = path;
        }
        continue;
      }
      if (used & (Mask{1} << y)) continue;
      Mask open = (allowed & ~used) | (Mask{1} << anchor);
      Mask reach = reachable(out, y, open);
      if (!(reach & (Mask{1} << anchor))) continue;
      int ub = static_cast<int>(path.size()) +
               std::popcount(reach & allowed & ~used & ~(Mask{1} << anchor));
      if (ub <= best) continue;
      path.push_back(y);
      extend(y, used | (Mask{1} << y));
      path.pop_back();
    }
  }
};

}  // namespace

CircumferenceResult circumference(const Digraph& g, int scc_size_guard) {
  if (scc_size_guard < 1 || scc_size_guard > 31)
    throw std::invalid_argument("scc size guard must be in [1, 31]");
  auto sccs = strongly_connected_components(g);
  CircumferenceResult result;
  for (const auto& comp : sccs.components) {
    int k = static_cast<int>(comp.size());
    if (k < 2) continue;
    if (k > scc_size_guard) {
      std::ostringstream os;
      os << "strongly connected component of size " << k
         << " exceeds the size guard " << scc_size_guard
         << "; exact circumference refused";
      throw SizeGuardError(os.str());
    }
    auto sub = induced_subgraph(g, comp);
    std::vector<Mask> out(k, 0);
    for (auto [u, v] : sub.graph.arcs) out[u] |= Mask{1} << v;
    SccSearch search{out, k};
    search.run();
    if (search.best > result.length) {
      result.length = search.best;
      result.witness.clear();
      for (int local : search.best_path)
        result.witness.push_back(sub.vertices[local]);
    }
  }
  return result;
}

int circumference_oracle(const Digraph& g) {
  if (g.n > 9)
    throw std::invalid_argument("circumference oracle is limited to n <= 9");
  // For k = n..2, try every k-subset and every permutation fixing the
  // smallest element first; return the first k admitting a cycle.
  for (int k = g.n; k >= 2; --k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      // idx is an ascending k-subset; idx[0] is its smallest element and is
      // kept first so each cyclic sequence is tried exactly once.
      std::vector<int> rest(idx.begin() + 1, idx.end());
      do {
        bool ok = g.has_arc(idx[0], rest[0]);
        for (int i = 0; ok && i + 1 < static_cast<int>(rest.size()); ++i)
          ok = g.has_arc(rest[i], rest[i + 1]);
        if (ok && g.has_arc(rest.back(), idx[0])) return k;
      } while (std::next_permutation(rest.begin(), rest.end()));
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return 1;
}

bool is_simple_cycle(const Digraph& g, const std::vector<int>& cycle) {
  int k = static_cast<int>(cycle.size());
  if (k < 2) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int v : cycle)
    if (v < 0 || v >= g.n) return false;
  for (int i = 0; i < k; ++i)
    if (!g.has_arc(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

}  // namespace circwidth
