#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circwidth {

using Arc = std::pair<int, int>;

// Error for text inputs (graph files, decomposition files). `line` is the
// 1-based line number of the offending line, 0 when no single line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Simple digraph: no self-loops, no parallel arcs. `arcs` is sorted and
// duplicate-free; adjacency lists are sorted ascending. All algorithms in
// this library iterate these in order, which makes every result
// deterministic for a given graph.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  // Builds a digraph, canonicalizing arc order. Throws std::invalid_argument
  // on out-of-range endpoints, self-loops, or duplicate arcs.
  static Digraph make(int n, std::vector<Arc> arc_list);

  bool has_arc(int u, int v) const;
  int m() const { return static_cast<int>(arcs.size()); }
};

// Edge-list text format:
//   first content line: "n m"
//   then exactly m lines "u v"
// Blank lines and lines starting with '#' are ignored. Throws ParseError
// (naming the line) on malformed lines, out-of-range ids, self-loops,
// duplicate arcs, or an arc count that disagrees with the header.
Digraph parse_digraph(std::istream& is);
Digraph parse_digraph(const std::string& text);

// Inverse of parse_digraph; output is canonical (header, then sorted arcs),
// so serialize(parse(serialize(g))) is byte-identical.
std::string serialize_digraph(const Digraph& g);

// Subgraph induced by `vertices` (must be valid ids, no duplicates),
// relabeled to 0..k-1 in ascending order of original id. `vertices[new_id]`
// in the result gives the original id.
struct InducedSubgraph {
  Digraph graph;
  std::vector<int> vertices;
};
InducedSubgraph induced_subgraph(const Digraph& g, std::vector<int> vertices);

// Strongly connected components, Tarjan's algorithm. Components are listed
// in reverse topological order of the condensation (every arc between
// distinct components goes from a later component to an earlier one), each
// with its vertices sorted ascending.
struct SccPartition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
};
SccPartition strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// True iff g is a directed union of the induced subgraphs on v1 and v2:
// v1 and v2 must cover all vertices (may overlap), and no arc may run from
// v2 \ v1 to v1 \ v2. SCC components form a chain of directed unions when
// split at any prefix.
bool is_directed_union(const Digraph& g, const std::vector<int>& v1,
                       const std::vector<int>& v2);

}  // namespace circwidth
