#include "circwidth/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "circwidth/rng.hpp"

namespace circwidth {

const char* to_string(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::BidirectedComplete: return "bidirected-complete";
    case Family::BidirectedFromUndirected: return "bidirected-from-undirected";
    case Family::RandomScc: return "random-scc";
    case Family::RandomDag: return "random-dag";
    case Family::Tournament: return "tournament";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : all_families())
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown family \"" + s + "\"");
}

std::vector<Family> all_families() {
  return {Family::Cycle,     Family::BidirectedComplete,
          Family::BidirectedFromUndirected,
          Family::RandomScc, Family::RandomDag,
          Family::Tournament};
}

namespace {

// Draw order contracts (all loops ascending, one draw per visited pair):
//   bidirected-from-undirected: pairs (u, v), u < v, p = 1/2
//   random-scc: ordered pairs (u, v), u != v, p = min(1, 2 ln n / n),
//     whole pass retried (fresh draws, same stream) until strongly
//     connected, at most 1000 passes
//   random-dag: a Fisher-Yates shuffle (i = n-1..1, j = below(i+1)) fixes a
//     topological position for every vertex, then ordered pairs (u, v),
//     u != v, draw only when pos[u] < pos[v], p = 0.3
//   tournament: pairs (u, v), u < v, orientation u->v iff draw < 1/2

Digraph gen_cycle(int n) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph::make(n, std::move(arcs));
}

Digraph gen_bidirected_complete(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph::make(n, std::move(arcs));
}

Digraph gen_bidirected_from_undirected(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Arc> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < 0.5) edges.emplace_back(u, v);
  return to_bidirected(n, edges);
}

Digraph gen_random_scc(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  double p = n > 1 ? std::min(1.0, 2.0 * std::log(n) / n) : 0.0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng.next_double() < p) arcs.emplace_back(u, v);
    Digraph g = Digraph::make(n, std::move(arcs));
    if (is_strongly_connected(g)) return g;
  }
  std::ostringstream os;
  os << "random-scc(" << n << ", " << seed
     << ") not strongly connected after 1000 attempts";
  throw std::runtime_error(os.str());
}

Digraph gen_random_dag(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i >= 1; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && pos[u] < pos[v] && rng.next_double() < 0.3)
        arcs.emplace_back(u, v);
  return Digraph::make(n, std::move(arcs));
}

Digraph gen_tournament(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < 0.5)
        arcs.emplace_back(u, v);
      else
        arcs.emplace_back(v, u);
    }
  return Digraph::make(n, std::move(arcs));
}

}  // namespace

Digraph gen(const FamilySpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("family size must be >= 1");
  switch (spec.family) {
    case Family::Cycle: return gen_cycle(spec.n);
    case Family::BidirectedComplete: return gen_bidirected_complete(spec.n);
    case Family::BidirectedFromUndirected:
      return gen_bidirected_from_undirected(spec.n, spec.seed);
    case Family::RandomScc: return gen_random_scc(spec.n, spec.seed);
    case Family::RandomDag: return gen_random_dag(spec.n, spec.seed);
    case Family::Tournament: return gen_tournament(spec.n, spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

Digraph to_bidirected(int n, const std::vector<Arc>& undirected_edges) {
  std::set<Arc> seen;
  std::vector<Arc> arcs;
  for (auto [u, v] : undirected_edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    Arc key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate undirected edge");
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph::make(n, std::move(arcs));
}

}  // namespace circwidth
