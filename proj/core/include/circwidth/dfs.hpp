#pragma once

#include <vector>

#include "circwidth/digraph.hpp"

namespace circwidth {

enum class EdgeKind { Tree, Forward, Back, Cross };

const char* to_string(EdgeKind k);

// Rooted DFS tree of a strongly connected digraph, with every arc
// classified. Children are visited in ascending vertex id, so the tree and
// the preorder numbering are canonical for a given (graph, root).
struct DfsForest {
  int n = 0;
  int root = 0;
  std::vector<int> parent;        // -1 at the root
  std::vector<int> dfs_number;    // preorder rank of each vertex
  std::vector<int> order;         // rank -> vertex
  std::vector<int> subtree_size;  // vertices in the subtree, self included
  std::vector<int> depth;
  std::vector<Arc> tree_arcs;               // sorted
  std::vector<EdgeKind> arc_kind;           // parallel to the graph's arcs
  std::vector<Arc> arcs;                    // copy of the graph's arcs

  // a lies on the tree path from the root to b (reflexive).
  bool is_ancestor(int a, int b) const {
    return dfs_number[a] <= dfs_number[b] &&
           dfs_number[b] < dfs_number[a] + subtree_size[a];
  }

  EdgeKind kind(int u, int v) const;  // arc must exist

  // Vertices of the subtree rooted at v, ascending ids.
  std::vector<int> subtree(int v) const;

  // Tree-path vertices {x : top is an ancestor of x, x an ancestor of
  // bottom}, ascending ids. top must be an ancestor of bottom.
  std::vector<int> chain(int top, int bottom) const;
};

// Throws std::invalid_argument if g is not strongly connected or root is out
// of range (the decomposition constructions need every vertex reachable).
DfsForest build_dfs_tree(const Digraph& g, int root);

// The DFS tree augmented with one extra arc (v, u) for every ordered pair
// where u precedes v in preorder but is not an ancestor of v. The result is
// a DAG with the DFS root as its unique source; these are the underlying
// dags of the dag and kelly decompositions. Reachability is materialized as
// an n*n closure.
struct AugmentedDag {
  int n = 0;
  int root = 0;
  std::vector<Arc> tree_arcs;   // sorted
  std::vector<Arc> extra_arcs;  // sorted
  std::vector<char> closure;    // closure[a * n + b]: b reachable from a

  bool reaches(int a, int b) const { return closure[a * n + b] != 0; }
  std::vector<Arc> all_arcs() const;       // sorted
  std::vector<int> children(int v) const;  // out-neighbors, ascending
};

AugmentedDag augment(const DfsForest& f);

}  // namespace circwidth
