#pragma once

#include <vector>

#include "circwidth/decomposition.hpp"
#include "circwidth/dfs.hpp"
#include "circwidth/digraph.hpp"

namespace circwidth {

// For each vertex v, B(v) is the set of proper tree-ancestors of v that
// receive a back arc from inside v's subtree, sorted by depth (shallowest
// first, i.e. ascending dfs number). b0(v) = targets[v].front() is the
// highest vertex reachable from the subtree by a single back arc.
struct BackEdgeIndex {
  std::vector<std::vector<int>> targets;
};

BackEdgeIndex build_back_edge_index(const Digraph& g, const DfsForest& f);

// hook(v): the top of v's bag interval. b0(v) when the subtree of v has a
// back arc to a proper ancestor, otherwise v itself.
std::vector<int> make_hooks(const DfsForest& f, const BackEdgeIndex& idx);

// DFS-based constructions. All three take the bags straight off the tree:
// every node bag is the singleton {v}; guard bags are the tree interval
// from the highest back-arc target below the arc down to the arc's tail
// (arboreal) or to the vertex itself (dag/kelly), plus the root.
//
// Node ids equal graph vertex ids. Each bag's size is at most l + 1 where l
// is the circumference, which is what makes the widths certify
// width <= circumference + 1. The constructions do NOT guarantee their own
// validity axioms on every strongly connected input (cross arcs can leak
// around the guard intervals); run the validators to certify a particular
// output, and see the survey tool for counterexample reporting.
ArborealDecomposition build_arboreal(const DfsForest& f,
                                     const BackEdgeIndex& idx);
DagDecomposition build_dag(const DfsForest& f, const BackEdgeIndex& idx);
KellyDecomposition build_kelly(const DfsForest& f, const BackEdgeIndex& idx);

Decomposition build(DecompKind kind, const DfsForest& f,
                    const BackEdgeIndex& idx);

}  // namespace circwidth
