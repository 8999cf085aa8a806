#include "circwidth/validate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace circwidth {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// First element of a \ b, or -1 if a is a subset of b.
int first_not_in(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a)
    if (!contains(b, v)) return v;
  return -1;
}

std::string join_path(const std::vector<int>& path) {
  std::ostringstream os;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) os << " -> ";
    os << path[i];
  }
  return os.str();
}

void check_bag(const std::vector<int>& bag, int n, const char* what) {
  for (size_t i = 0; i < bag.size(); ++i) {
    if (bag[i] < 0 || bag[i] >= n)
      throw std::invalid_argument(std::string(what) +
                                  " contains an out-of-range vertex");
    if (i > 0 && bag[i] <= bag[i - 1])
      throw std::invalid_argument(std::string(what) +
                                  " is not sorted and duplicate-free");
  }
}

// Shared structural scaffolding over a decomposition's node/arc sets:
// index lookup, reflexive reachability, roots.
struct NodeDag {
  std::vector<int> nodes;
  std::vector<Arc> arcs;
  std::map<int, int> index;
  std::vector<char> closure;  // closure[i * k + j] over node indices
  std::vector<int> roots;     // ascending node ids

  NodeDag(const std::vector<int>& nodes_in, const std::vector<Arc>& arcs_in,
          bool require_arborescence)
      : nodes(nodes_in), arcs(arcs_in) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (i > 0 && nodes[i] <= nodes[i - 1])
        throw std::invalid_argument("node list is not sorted and unique");
      index[nodes[i]] = static_cast<int>(i);
    }
    int k = static_cast<int>(nodes.size());
    std::vector<int> indeg(k, 0);
    std::vector<std::vector<int>> adj(k);
    for (auto [u, v] : arcs) {
      auto iu = index.find(u), iv = index.find(v);
      if (iu == index.end() || iv == index.end())
        throw std::invalid_argument("arc references a node not in the list");
      if (u == v) throw std::invalid_argument("self-loop in decomposition");
      adj[iu->second].push_back(iv->second);
      ++indeg[iv->second];
    }
    // Kahn: a leftover vertex means a cycle.
    std::deque<int> q;
    for (int i = 0; i < k; ++i)
      if (indeg[i] == 0) q.push_back(i);
    int seen = 0;
    std::vector<int> deg = indeg;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      ++seen;
      for (int y : adj[x])
        if (--deg[y] == 0) q.push_back(y);
    }
    if (seen != k)
      throw std::invalid_argument("decomposition arcs contain a cycle");
    for (int i = 0; i < k; ++i)
      if (indeg[i] == 0) roots.push_back(nodes[i]);

    if (require_arborescence && k > 0) {
      if (static_cast<int>(arcs.size()) != k - 1 || roots.size() != 1)
        throw std::invalid_argument(
            "decomposition arcs do not form an arborescence");
      for (int i = 0; i < k; ++i)
        if (indeg[i] > 1)
          throw std::invalid_argument(
              "decomposition arcs do not form an arborescence");
    }

    closure.assign(static_cast<size_t>(k) * k, 0);
    for (int s = 0; s < k; ++s) {
      std::vector<int> stack{s};
      closure[static_cast<size_t>(s) * k + s] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (!closure[static_cast<size_t>(s) * k + y]) {
            closure[static_cast<size_t>(s) * k + y] = 1;
            stack.push_back(y);
          }
      }
    }
  }

  bool reaches(int a, int b) const {
    return closure[static_cast<size_t>(index.at(a)) * nodes.size() +
                   index.at(b)] != 0;
  }

  // Union of per-node sorted bags over all nodes reachable from `from`.
  std::vector<int> union_beyond(
      int from, const std::map<int, std::vector<int>>& bags) const {
    std::vector<int> acc;
    for (int k : nodes)
      if (reaches(from, k)) acc = set_union(acc, bags.at(k));
    return acc;
  }
};

void check_keys(const std::map<int, std::vector<int>>& bags,
                const std::vector<int>& nodes, const char* what) {
  if (bags.size() != nodes.size())
    throw std::invalid_argument(std::string(what) +
                                " must have exactly one entry per node");
  for (int i : nodes)
    if (!bags.count(i))
      throw std::invalid_argument(std::string(what) + " missing node entry");
}

// Partition check shared by DTW-1 and KW-1.
AxiomCheck partition_check(const char* axiom, const Digraph& g,
                           const std::vector<int>& nodes,
                           const std::map<int, std::vector<int>>& bags) {
  AxiomCheck c{axiom, true, ""};
  std::vector<int> count(g.n, 0);
  for (int i : nodes)
    for (int v : bags.at(i)) ++count[v];
  for (int v = 0; v < g.n; ++v) {
    if (count[v] == 0) {
      c.pass = false;
      std::ostringstream os;
      os << "vertex " << v << " is in no node bag";
      c.witness = os.str();
      return c;
    }
    if (count[v] > 1) {
      c.pass = false;
      std::ostringstream os;
      os << "vertex " << v << " is in " << count[v] << " node bags";
      c.witness = os.str();
      return c;
    }
  }
  return c;
}

std::string guard_witness(const Arc& w) {
  std::ostringstream os;
  if (w.second < 0)
    os << "guard set intersects the guarded set at vertex " << w.first;
  else
    os << "arc (" << w.first << ", " << w.second << ") escapes unguarded";
  return os.str();
}

}  // namespace

bool guards(const Digraph& g, const std::vector<int>& x,
            const std::vector<int>& w, Arc* witness) {
  for (int v : x)
    if (contains(w, v)) {
      if (witness) *witness = {v, -1};
      return false;
    }
  for (auto [a, b] : g.arcs)
    if (contains(w, a) && !contains(w, b) && !contains(x, b)) {
      if (witness) *witness = {a, b};
      return false;
    }
  return true;
}

bool is_x_normal(const Digraph& g, const std::vector<int>& x,
                 const std::vector<int>& w, std::vector<int>* witness_path) {
  for (int v : x)
    if (contains(w, v)) {
      if (witness_path) *witness_path = {v};
      return false;
    }
  // Forward and backward BFS from W inside g minus X; a vertex outside both
  // sets reached in both directions closes a W-to-W walk through it.
  std::vector<int> fwd_par(g.n, -2), bwd_par(g.n, -2);
  std::deque<int> q;
  for (int s : w) {
    fwd_par[s] = -1;
    q.push_back(s);
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b : g.out[a])
      if (!contains(x, b) && fwd_par[b] == -2) {
        fwd_par[b] = a;
        q.push_back(b);
      }
  }
  for (int s : w) {
    bwd_par[s] = -1;
    q.push_back(s);
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b : g.in[a])
      if (!contains(x, b) && bwd_par[b] == -2) {
        bwd_par[b] = a;
        q.push_back(b);
      }
  }
  for (int z = 0; z < g.n; ++z) {
    if (contains(w, z) || contains(x, z)) continue;
    if (fwd_par[z] == -2 || bwd_par[z] == -2) continue;
    if (witness_path) {
      std::vector<int> head;  // some w ... z
      for (int a = z; a != -1; a = fwd_par[a]) head.push_back(a);
      std::reverse(head.begin(), head.end());
      for (int a = bwd_par[z]; a != -1; a = bwd_par[a]) head.push_back(a);
      *witness_path = std::move(head);
    }
    return false;
  }
  return true;
}

std::vector<std::string> ValidationReport::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.axiom);
  return out;
}

ValidationReport validate(const Digraph& g, const ArborealDecomposition& d) {
  check_keys(d.node_bags, d.nodes, "node bag map");
  if (d.arc_bags.size() != d.arcs.size())
    throw std::invalid_argument("arc bag map must have one entry per arc");
  for (const auto& e : d.arcs)
    if (!d.arc_bags.count(e))
      throw std::invalid_argument("arc bag map missing an arc entry");
  for (const auto& [i, bag] : d.node_bags) check_bag(bag, g.n, "node bag");
  for (const auto& [e, bag] : d.arc_bags) check_bag(bag, g.n, "arc bag");
  NodeDag nd(d.nodes, d.arcs, /*require_arborescence=*/true);

  ValidationReport r;
  r.width = width(d);
  r.checks.push_back(partition_check("DTW-1", g, d.nodes, d.node_bags));

  AxiomCheck dtw2{"DTW-2", true, ""};
  for (const auto& e : d.arcs) {
    std::vector<int> beyond = nd.union_beyond(e.second, d.node_bags);
    std::vector<int> path;
    if (!is_x_normal(g, d.arc_bags.at(e), beyond, &path)) {
      dtw2.pass = false;
      std::ostringstream os;
      os << "arc (" << e.first << ", " << e.second << "): bags beyond are not "
         << "A-normal";
      if (path.size() == 1)
        os << " (guard bag contains protected vertex " << path[0] << ")";
      else
        os << ": walk " << join_path(path);
      dtw2.witness = os.str();
      break;
    }
  }
  r.checks.push_back(std::move(dtw2));
  return r;
}

ValidationReport validate(const Digraph& g, const DagDecomposition& d) {
  check_keys(d.bags, d.nodes, "bag map");
  for (const auto& [i, bag] : d.bags) check_bag(bag, g.n, "bag");
  NodeDag nd(d.nodes, d.arcs, /*require_arborescence=*/false);

  ValidationReport r;
  r.width = width(d);

  AxiomCheck dgw1{"DGW-1", true, ""};
  {
    std::vector<char> covered(g.n, 0);
    for (const auto& [i, bag] : d.bags)
      for (int v : bag) covered[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!covered[v]) {
        dgw1.pass = false;
        std::ostringstream os;
        os << "vertex " << v << " is in no bag";
        dgw1.witness = os.str();
        break;
      }
  }
  r.checks.push_back(std::move(dgw1));

  AxiomCheck dgw2{"DGW-2", true, ""};
  for (int i : d.nodes) {
    if (!dgw2.pass) break;
    for (int j : d.nodes) {
      if (!dgw2.pass) break;
      if (!nd.reaches(i, j)) continue;
      for (int k : d.nodes) {
        if (!nd.reaches(j, k)) continue;
        auto both = set_intersect(d.bags.at(i), d.bags.at(k));
        int missing = first_not_in(both, d.bags.at(j));
        if (missing >= 0) {
          dgw2.pass = false;
          std::ostringstream os;
          os << "nodes " << i << " <= " << j << " <= " << k << ": vertex "
             << missing << " is in both end bags but not the middle one";
          dgw2.witness = os.str();
          break;
        }
      }
    }
  }
  r.checks.push_back(std::move(dgw2));

  AxiomCheck dgw3{"DGW-3", true, ""};
  for (const auto& e : d.arcs) {
    auto x = set_intersect(d.bags.at(e.first), d.bags.at(e.second));
    auto beyond = set_minus(nd.union_beyond(e.second, d.bags),
                            d.bags.at(e.first));
    Arc w;
    if (!guards(g, x, beyond, &w)) {
      dgw3.pass = false;
      std::ostringstream os;
      os << "arc (" << e.first << ", " << e.second
         << "): " << guard_witness(w);
      dgw3.witness = os.str();
      break;
    }
  }
  if (dgw3.pass) {
    for (int root : nd.roots) {
      auto beyond = nd.union_beyond(root, d.bags);
      Arc w;
      if (!guards(g, {}, beyond, &w)) {
        dgw3.pass = false;
        std::ostringstream os;
        os << "root " << root << ": " << guard_witness(w);
        dgw3.witness = os.str();
        break;
      }
    }
  }
  r.checks.push_back(std::move(dgw3));
  return r;
}

ValidationReport validate(const Digraph& g, const KellyDecomposition& d) {
  check_keys(d.node_bags, d.nodes, "node bag map");
  check_keys(d.guard_bags, d.nodes, "guard bag map");
  for (const auto& [i, bag] : d.node_bags) check_bag(bag, g.n, "node bag");
  for (const auto& [i, bag] : d.guard_bags) check_bag(bag, g.n, "guard bag");
  NodeDag nd(d.nodes, d.arcs, /*require_arborescence=*/false);

  // The child and root orders must enumerate exactly the dag's structure.
  {
    std::map<int, std::vector<int>> children;
    for (auto [u, v] : d.arcs) children[u].push_back(v);
    for (auto& [u, kids] : children) std::sort(kids.begin(), kids.end());
    for (const auto& [i, seq] : d.child_order) {
      if (!std::binary_search(d.nodes.begin(), d.nodes.end(), i))
        throw std::invalid_argument("child order given for an unknown node");
      auto sorted_seq = seq;
      std::sort(sorted_seq.begin(), sorted_seq.end());
      auto it = children.find(i);
      const std::vector<int> none;
      if (sorted_seq != (it == children.end() ? none : it->second))
        throw std::invalid_argument(
            "child order does not enumerate the node's children");
    }
    for (const auto& [i, kids] : children)
      if (!kids.empty() && !d.child_order.count(i))
        throw std::invalid_argument("node with children lacks a child order");
    auto sorted_roots = d.root_order;
    std::sort(sorted_roots.begin(), sorted_roots.end());
    if (sorted_roots != nd.roots)
      throw std::invalid_argument(
          "root order does not enumerate the dag's roots");
  }

  ValidationReport r;
  r.width = width(d);
  r.checks.push_back(partition_check("KW-1", g, d.nodes, d.node_bags));

  AxiomCheck kw2{"KW-2", true, ""};
  for (int i : d.nodes) {
    auto beyond = nd.union_beyond(i, d.node_bags);
    Arc w;
    if (!guards(g, d.guard_bags.at(i), beyond, &w)) {
      kw2.pass = false;
      std::ostringstream os;
      os << "node " << i << ": " << guard_witness(w);
      kw2.witness = os.str();
      break;
    }
  }
  r.checks.push_back(std::move(kw2));

  AxiomCheck kw3{"KW-3", true, ""};
  for (int i : d.nodes) {
    if (!kw3.pass) break;
    auto acc = set_union(d.node_bags.at(i), d.guard_bags.at(i));
    auto it = d.child_order.find(i);
    if (it == d.child_order.end()) continue;
    for (int c : it->second) {
      int missing = first_not_in(d.guard_bags.at(c), acc);
      if (missing >= 0) {
        kw3.pass = false;
        std::ostringstream os;
        os << "node " << i << ", child " << c << ": guard vertex " << missing
           << " is not covered by the parent and earlier siblings";
        kw3.witness = os.str();
        break;
      }
      acc = set_union(acc, nd.union_beyond(c, d.node_bags));
    }
  }
  if (kw3.pass) {
    std::vector<int> acc;
    for (int root : d.root_order) {
      int missing = first_not_in(d.guard_bags.at(root), acc);
      if (missing >= 0) {
        kw3.pass = false;
        std::ostringstream os;
        os << "root " << root << ": guard vertex " << missing
           << " is not covered by earlier roots";
        kw3.witness = os.str();
        break;
      }
      acc = set_union(acc, nd.union_beyond(root, d.node_bags));
    }
  }
  r.checks.push_back(std::move(kw3));
  return r;
}

ValidationReport validate(const Digraph& g, const Decomposition& d) {
  return std::visit([&](const auto& x) { return validate(g, x); }, d);
}

}  // namespace circwidth
