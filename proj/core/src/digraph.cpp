#include "circwidth/digraph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace circwidth {

namespace {

std::string at_line(int line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  return os.str();
}

// Strict integer token: optional '-', digits only.
bool to_int(const std::string& tok, long long& value) {
  if (tok.empty()) return false;
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (size_t j = i; j < tok.size(); ++j)
    if (tok[j] < '0' || tok[j] > '9') return false;
  errno = 0;
  value = std::stoll(tok);
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

bool is_content(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c != '#';
  }
  return false;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? at_line(line, what) : what), line_(line) {}

Digraph Digraph::make(int n, std::vector<Arc> arc_list) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::sort(arc_list.begin(), arc_list.end());
  for (size_t i = 0; i < arc_list.size(); ++i) {
    auto [u, v] = arc_list[i];
    std::ostringstream os;
    if (u < 0 || u >= n || v < 0 || v >= n) {
      os << "arc (" << u << ", " << v << ") out of range for n=" << n;
      throw std::invalid_argument(os.str());
    }
    if (u == v) {
      os << "self-loop at vertex " << u;
      throw std::invalid_argument(os.str());
    }
    if (i > 0 && arc_list[i] == arc_list[i - 1]) {
      os << "duplicate arc (" << u << ", " << v << ")";
      throw std::invalid_argument(os.str());
    }
  }
  Digraph g;
  g.n = n;
  g.arcs = std::move(arc_list);
  g.out.assign(n, {});
  g.in.assign(n, {});
  for (auto [u, v] : g.arcs) {
    g.out[u].push_back(v);
    g.in[v].push_back(u);
  }
  for (auto& a : g.in) std::sort(a.begin(), a.end());
  return g;
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{u, v});
}

Digraph parse_digraph(std::istream& is) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  int header_line = 0;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int seen_arcs = 0;

  while (std::getline(is, line)) {
    ++line_no;
    if (!is_content(line)) continue;
    auto toks = tokens_of(line);
    if (n < 0) {
      long long a, b;
      if (toks.size() != 2 || !to_int(toks[0], a) || !to_int(toks[1], b))
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      if (a < 0 || b < 0)
        throw ParseError(line_no, "header counts must be nonnegative");
      n = a;
      m = b;
      header_line = line_no;
      continue;
    }
    if (seen_arcs == m) {
      std::ostringstream os;
      os << "unexpected extra line, header announced " << m << " arcs";
      throw ParseError(line_no, os.str());
    }
    long long u, v;
    if (toks.size() != 2 || !to_int(toks[0], u) || !to_int(toks[1], v))
      throw ParseError(line_no, "malformed arc line, expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "vertex id out of range [0, " << n << ") in arc (" << u << ", "
         << v << ")";
      throw ParseError(line_no, os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "self-loop at vertex " << u;
      throw ParseError(line_no, os.str());
    }
    Arc a{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(a).second) {
      std::ostringstream os;
      os << "duplicate arc (" << u << ", " << v << ")";
      throw ParseError(line_no, os.str());
    }
    arcs.push_back(a);
    ++seen_arcs;
  }
  if (n < 0) throw ParseError(0, "empty input, expected \"n m\" header");
  if (seen_arcs != m) {
    std::ostringstream os;
    os << "header announced " << m << " arcs but only " << seen_arcs
       << " found";
    throw ParseError(header_line, os.str());
  }
  return Digraph::make(static_cast<int>(n), std::move(arcs));
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream is(text);
  return parse_digraph(is);
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream os;
  os << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.arcs) os << u << ' ' << v << '\n';
  return os.str();
}

InducedSubgraph induced_subgraph(const Digraph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.n)
      throw std::invalid_argument("induced vertex out of range");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw std::invalid_argument("duplicate vertex in induced set");
  }
  auto local = [&](int v) {
    return static_cast<int>(
        std::lower_bound(vertices.begin(), vertices.end(), v) -
        vertices.begin());
  };
  auto member = [&](int v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs)
    if (member(u) && member(v)) arcs.emplace_back(local(u), local(v));
  InducedSubgraph sub;
  sub.graph = Digraph::make(static_cast<int>(vertices.size()), std::move(arcs));
  sub.vertices = std::move(vertices);
  return sub;
}

SccPartition strongly_connected_components(const Digraph& g) {
  // Tarjan; components complete sink-first, i.e. reverse topological order.
  SccPartition p;
  p.component_of.assign(g.n, -1);
  std::vector<int> index(g.n, -1), lowlink(g.n, 0);
  std::vector<char> on_stack(g.n, 0);
  std::vector<int> stack;
  int next_index = 0;

  auto strongconnect = [&](auto&& self, int v) -> void {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : g.out[v]) {
      if (index[w] == -1) {
        self(self, w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        p.component_of[w] = static_cast<int>(p.components.size());
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      p.components.push_back(std::move(comp));
    }
  };

  for (int v = 0; v < g.n; ++v)
    if (index[v] == -1) strongconnect(strongconnect, v);
  return p;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.n == 0) return true;
  return strongly_connected_components(g).components.size() == 1;
}

bool is_directed_union(const Digraph& g, const std::vector<int>& v1,
                       const std::vector<int>& v2) {
  std::vector<char> in1(g.n, 0), in2(g.n, 0);
  for (int v : v1) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("v1 vertex out of range");
    in1[v] = 1;
  }
  for (int v : v2) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("v2 vertex out of range");
    in2[v] = 1;
  }
  for (int v = 0; v < g.n; ++v)
    if (!in1[v] && !in2[v])
      throw std::invalid_argument("v1 and v2 must cover all vertices");
  for (auto [u, v] : g.arcs)
    if (in2[u] && !in1[u] && in1[v] && !in2[v]) return false;
  return true;
}

}  // namespace circwidth
