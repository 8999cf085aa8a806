#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "circwidth/digraph.hpp"

namespace circwidth {

enum class DecompKind { Arboreal, Dag, Kelly };

const char* to_string(DecompKind k);
DecompKind decomp_kind_from_string(const std::string& s);

// All three decomposition types share conventions: `nodes` is the sorted
// list of decomposition-node ids, `arcs` the decomposition's own tree/dag
// arcs (sorted), and every bag is a sorted vector of graph vertex ids. Node
// ids are arbitrary ints (builders use graph vertex ids as node ids, but
// validators accept any labeling).

// Arboreal decomposition: `arcs` form an arborescence; every node carries a
// vertex bag W and every tree arc carries a guard bag A.
struct ArborealDecomposition {
  std::vector<int> nodes;
  std::vector<Arc> arcs;
  std::map<int, std::vector<int>> node_bags;  // W_i
  std::map<Arc, std::vector<int>> arc_bags;   // A_e

  bool operator==(const ArborealDecomposition&) const = default;
};

// Dag decomposition: `arcs` form a DAG; every node carries one bag X.
struct DagDecomposition {
  std::vector<int> nodes;
  std::vector<Arc> arcs;
  std::map<int, std::vector<int>> bags;  // X_i

  bool operator==(const DagDecomposition&) const = default;
};

// Kelly decomposition: a DAG whose nodes carry a vertex bag W and a guard
// bag X, together with an explicit enumeration order of each node's
// children and of the roots (the order is part of the decomposition: the
// third axiom quantifies over it).
struct KellyDecomposition {
  std::vector<int> nodes;
  std::vector<Arc> arcs;
  std::map<int, std::vector<int>> node_bags;    // W_i
  std::map<int, std::vector<int>> guard_bags;   // X_i
  std::map<int, std::vector<int>> child_order;  // children of i, in order
  std::vector<int> root_order;                  // in-degree-0 nodes, in order

  bool operator==(const KellyDecomposition&) const = default;
};

// Widths. Arboreal: max_i |W_i union all A_e with e incident to i| - 1.
// Dag: max_i |X_i|. Kelly: max_i |W_i union X_i|. An empty decomposition has
// width 0; node relabelings leave all three invariant.
int width(const ArborealDecomposition& d);
int width(const DagDecomposition& d);
int width(const KellyDecomposition& d);

using Decomposition =
    std::variant<ArborealDecomposition, DagDecomposition, KellyDecomposition>;

DecompKind kind_of(const Decomposition& d);
int width(const Decomposition& d);

// Text format, one document per decomposition. Canonical output sorts nodes,
// arcs, and bag contents, so parse/serialize round-trip byte-identically on
// canonical input. Example (kelly, C3):
//   kelly 3
//   node 0 W: 0 X:
//   node 1 W: 1 X: 0
//   node 2 W: 2 X: 0 1
//   arc 0 1
//   arc 1 2
//   roots 0
//   order 0: 1
//   order 1: 2
// Arboreal node lines carry only "W:", arc lines a trailing "A:" bag; dag
// node lines carry only "X:". Kelly "order i:" lines may be omitted for
// childless nodes; a missing "roots" line defaults to in-degree-0 nodes
// ascending. Throws ParseError on malformed input.
std::string serialize_decomposition(const Decomposition& d);
Decomposition parse_decomposition(std::istream& is);
Decomposition parse_decomposition(const std::string& text);

// A decomposition of an arbitrary digraph: one decomposition per strongly
// connected component, in reverse topological order, all in original vertex
// ids. Width is the max over parts (0 if empty). Format:
//   bundle <kind> <number of sections>
// then per section a line "scc <index> vertices: <ids>" followed by one
// decomposition document.
struct DecompositionBundle {
  DecompKind kind = DecompKind::Arboreal;
  std::vector<std::vector<int>> scc_vertices;
  std::vector<Decomposition> parts;

  bool operator==(const DecompositionBundle&) const = default;
};

int width(const DecompositionBundle& b);

std::string serialize_bundle(const DecompositionBundle& b);
DecompositionBundle parse_bundle(std::istream& is);
DecompositionBundle parse_bundle(const std::string& text);

// True if the first content line of `text` is a bundle header.
bool looks_like_bundle(const std::string& text);

}  // namespace circwidth
