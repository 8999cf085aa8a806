#pragma once

#include <string>
#include <vector>

#include "circwidth/decomposition.hpp"
#include "circwidth/digraph.hpp"

namespace circwidth {

// X guards W: X and W are disjoint and every arc leaving W lands in W or X.
// On failure *witness (if given) receives the offending arc, or the
// overlapping vertex as (v, -1).
bool guards(const Digraph& g, const std::vector<int>& x,
            const std::vector<int>& w, Arc* witness = nullptr);

// W is X-normal in g: no directed walk that starts and ends in W (endpoints
// may coincide), avoids X, and passes through a vertex outside W and X.
// Equivalently: no vertex outside W and X is both reachable from W and able
// to reach W in g minus X. On failure *witness_path (if given) receives a
// shortest offending walk as a vertex sequence starting and ending in W.
bool is_x_normal(const Digraph& g, const std::vector<int>& x,
                 const std::vector<int>& w,
                 std::vector<int>* witness_path = nullptr);

// One axiom's verdict. `witness` is empty on pass, otherwise a concrete
// human-readable counterexample (a vertex, arc, or path).
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  int width = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::vector<std::string> failed_axioms() const;
};

// Axiom validators. Structural defects (node/bag key mismatches, arcs not
// forming an arborescence / DAG, out-of-range bag vertices, child or root
// orders that do not match the decomposition's arcs) throw
// std::invalid_argument: such an object is not a decomposition at all.
// Axiom violations never throw; they come back as failed checks with
// witnesses. All checks are evaluated (no short-circuiting).
//
// Arboreal axioms: DTW-1 (node bags partition the vertices) and DTW-2 (for
// every tree arc e, the union of bags strictly beyond e is A_e-normal).
ValidationReport validate(const Digraph& g, const ArborealDecomposition& d);

// Dag axioms: DGW-1 (bags cover the vertices), DGW-2 (for nodes i <= j <= k
// in dag reachability, X_i intersect X_k is contained in X_j), DGW-3 (for
// every dag arc (i,j), X_i intersect X_j guards the union of bags at and
// beyond j minus X_i; for every root r, the empty set guards the union at
// and beyond r).
ValidationReport validate(const Digraph& g, const DagDecomposition& d);

// Kelly axioms: KW-1 (node bags partition the vertices), KW-2 (X_i guards
// the union of W-bags at and beyond i), KW-3 (children of each node, in the
// given order, satisfy X_c contained in W_i union X_i union the W-unions of
// earlier siblings; roots likewise with an empty start).
ValidationReport validate(const Digraph& g, const KellyDecomposition& d);

ValidationReport validate(const Digraph& g, const Decomposition& d);

}  // namespace circwidth
