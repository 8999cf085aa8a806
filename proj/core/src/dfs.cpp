#include "circwidth/dfs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace circwidth {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Tree: return "TREE";
    case EdgeKind::Forward: return "FORWARD";
    case EdgeKind::Back: return "BACK";
    case EdgeKind::Cross: return "CROSS";
  }
  return "?";
}

EdgeKind DfsForest::kind(int u, int v) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{u, v});
  if (it == arcs.end() || *it != Arc{u, v})
    throw std::invalid_argument("kind() of a nonexistent arc");
  return arc_kind[it - arcs.begin()];
}

std::vector<int> DfsForest::subtree(int v) const {
  std::vector<int> out(order.begin() + dfs_number[v],
                       order.begin() + dfs_number[v] + subtree_size[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DfsForest::chain(int top, int bottom) const {
  if (!is_ancestor(top, bottom))
    throw std::invalid_argument("chain(): top is not an ancestor of bottom");
  std::vector<int> out;
  for (int x = bottom;; x = parent[x]) {
    out.push_back(x);
    if (x == top) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DfsForest build_dfs_tree(const Digraph& g, int root) {
  if (root < 0 || root >= g.n)
    throw std::invalid_argument("dfs root out of range");
  if (!is_strongly_connected(g))
    throw std::invalid_argument("digraph is not strongly connected");

  DfsForest f;
  f.n = g.n;
  f.root = root;
  f.parent.assign(g.n, -1);
  f.dfs_number.assign(g.n, -1);
  f.subtree_size.assign(g.n, 1);
  f.depth.assign(g.n, 0);
  f.arcs = g.arcs;

  auto visit = [&](auto&& self, int u) -> void {
    f.dfs_number[u] = static_cast<int>(f.order.size());
    f.order.push_back(u);
    for (int v : g.out[u]) {
      if (f.dfs_number[v] == -1) {
        f.parent[v] = u;
        f.depth[v] = f.depth[u] + 1;
        self(self, v);
      }
    }
  };
  visit(visit, root);

  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it)
    if (f.parent[*it] != -1) f.subtree_size[f.parent[*it]] += f.subtree_size[*it];

  for (int v = 0; v < g.n; ++v)
    if (f.parent[v] != -1) f.tree_arcs.emplace_back(f.parent[v], v);
  std::sort(f.tree_arcs.begin(), f.tree_arcs.end());

  f.arc_kind.reserve(g.arcs.size());
  for (auto [u, v] : g.arcs) {
    if (f.parent[v] == u)
      f.arc_kind.push_back(EdgeKind::Tree);
    else if (f.is_ancestor(v, u))
      f.arc_kind.push_back(EdgeKind::Back);
    else if (f.is_ancestor(u, v))
      f.arc_kind.push_back(EdgeKind::Forward);
    else
      f.arc_kind.push_back(EdgeKind::Cross);
  }
  return f;
}

std::vector<Arc> AugmentedDag::all_arcs() const {
  std::vector<Arc> all = tree_arcs;
  all.insert(all.end(), extra_arcs.begin(), extra_arcs.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> AugmentedDag::children(int v) const {
  std::vector<int> out;
  for (auto [a, b] : tree_arcs)
    if (a == v) out.push_back(b);
  for (auto [a, b] : extra_arcs)
    if (a == v) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

AugmentedDag augment(const DfsForest& f) {
  AugmentedDag d;
  d.n = f.n;
  d.root = f.root;
  d.tree_arcs = f.tree_arcs;
  // One arc (v, u) for each preorder-earlier non-ancestor u of v. Any cycle
  // in the result would have a minimum-preorder vertex whose in-arc on the
  // cycle comes from its own subtree, and neither tree nor extra arcs do
  // that, so the result is a DAG; the root reaches everything via tree arcs.
  for (int v = 0; v < f.n; ++v)
    for (int r = 0; r < f.dfs_number[v]; ++r) {
      int u = f.order[r];
      if (!f.is_ancestor(u, v)) d.extra_arcs.emplace_back(v, u);
    }
  std::sort(d.extra_arcs.begin(), d.extra_arcs.end());

  d.closure.assign(static_cast<size_t>(f.n) * f.n, 0);
  std::vector<std::vector<int>> adj(f.n);
  for (auto [a, b] : d.tree_arcs) adj[a].push_back(b);
  for (auto [a, b] : d.extra_arcs) adj[a].push_back(b);
  for (int s = 0; s < f.n; ++s) {
    std::vector<int> stack{s};
    d.closure[static_cast<size_t>(s) * f.n + s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!d.closure[static_cast<size_t>(s) * f.n + y]) {
          d.closure[static_cast<size_t>(s) * f.n + y] = 1;
          stack.push_back(y);
        }
    }
  }
  return d;
}

}  // namespace circwidth
