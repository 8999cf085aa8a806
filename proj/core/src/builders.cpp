#include "circwidth/builders.hpp"

#include <algorithm>
#include <numeric>

namespace circwidth {

BackEdgeIndex build_back_edge_index(const Digraph& g, const DfsForest& f) {
  if (g.n != f.n)
    throw std::invalid_argument("digraph and dfs tree sizes disagree");
  BackEdgeIndex idx;
  idx.targets.assign(f.n, {});
  // A back arc (a, b) contributes b to B(v) for every v on the tree path
  // strictly below b down to a: exactly the subtrees containing a whose
  // root is a proper descendant of b.
  for (size_t i = 0; i < f.arcs.size(); ++i) {
    if (f.arc_kind[i] != EdgeKind::Back) continue;
    auto [a, b] = f.arcs[i];
    for (int v = a; v != b; v = f.parent[v]) idx.targets[v].push_back(b);
  }
  for (int v = 0; v < f.n; ++v) {
    auto& t = idx.targets[v];
    std::sort(t.begin(), t.end(),
              [&](int x, int y) { return f.dfs_number[x] < f.dfs_number[y]; });
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  return idx;
}

std::vector<int> make_hooks(const DfsForest& f, const BackEdgeIndex& idx) {
  std::vector<int> hook(f.n);
  std::iota(hook.begin(), hook.end(), 0);
  for (int v = 0; v < f.n; ++v)
    if (!idx.targets[v].empty()) hook[v] = idx.targets[v].front();
  return hook;
}

namespace {

std::vector<int> with_root(const DfsForest& f, std::vector<int> bag) {
  bag.push_back(f.root);
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

}  // namespace

ArborealDecomposition build_arboreal(const DfsForest& f,
                                     const BackEdgeIndex& idx) {
  ArborealDecomposition d;
  d.nodes.resize(f.n);
  std::iota(d.nodes.begin(), d.nodes.end(), 0);
  d.arcs = f.tree_arcs;
  for (int i : d.nodes) d.node_bags[i] = {i};
  for (auto e : f.tree_arcs) {
    auto [u, v] = e;
    // Guard for the subtree under v: the root plus the tree interval from
    // the highest back-arc target of v's subtree down to u. Root arcs and
    // subtrees with no escaping back arc are guarded by the root alone.
    if (u == f.root || idx.targets[v].empty()) {
      d.arc_bags[e] = {f.root};
    } else {
      d.arc_bags[e] = with_root(f, f.chain(idx.targets[v].front(), u));
    }
  }
  return d;
}

DagDecomposition build_dag(const DfsForest& f, const BackEdgeIndex& idx) {
  auto aug = augment(f);
  auto hook = make_hooks(f, idx);
  DagDecomposition d;
  d.nodes.resize(f.n);
  std::iota(d.nodes.begin(), d.nodes.end(), 0);
  d.arcs = aug.all_arcs();
  for (int v : d.nodes) d.bags[v] = with_root(f, f.chain(hook[v], v));
  return d;
}

KellyDecomposition build_kelly(const DfsForest& f, const BackEdgeIndex& idx) {
  auto aug = augment(f);
  auto hook = make_hooks(f, idx);
  KellyDecomposition d;
  d.nodes.resize(f.n);
  std::iota(d.nodes.begin(), d.nodes.end(), 0);
  d.arcs = aug.all_arcs();
  for (int v : d.nodes) {
    d.node_bags[v] = {v};
    if (v == f.root) {
      d.guard_bags[v] = {};
    } else {
      auto bag = with_root(f, f.chain(hook[v], v));
      bag.erase(std::remove(bag.begin(), bag.end(), v), bag.end());
      d.guard_bags[v] = std::move(bag);
    }
  }
  // Children are enumerated deepest hook last: descending dfs number of the
  // hook, ties by ascending child id. The third axiom's prefix condition is
  // checked against exactly this order.
  for (int v : d.nodes) {
    auto kids = aug.children(v);
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
      if (f.dfs_number[hook[a]] != f.dfs_number[hook[b]])
        return f.dfs_number[hook[a]] > f.dfs_number[hook[b]];
      return a < b;
    });
    if (!kids.empty()) d.child_order[v] = std::move(kids);
  }
  d.root_order = {f.root};
  return d;
}

Decomposition build(DecompKind kind, const DfsForest& f,
                    const BackEdgeIndex& idx) {
  switch (kind) {
    case DecompKind::Arboreal: return build_arboreal(f, idx);
    case DecompKind::Dag: return build_dag(f, idx);
    case DecompKind::Kelly: return build_kelly(f, idx);
  }
  throw std::invalid_argument("unknown decomposition kind");
}

}  // namespace circwidth
