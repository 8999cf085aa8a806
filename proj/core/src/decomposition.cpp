#include "circwidth/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace circwidth {

const char* to_string(DecompKind k) {
  switch (k) {
    case DecompKind::Arboreal: return "arboreal";
    case DecompKind::Dag: return "dag";
    case DecompKind::Kelly: return "kelly";
  }
  return "?";
}

DecompKind decomp_kind_from_string(const std::string& s) {
  if (s == "arboreal") return DecompKind::Arboreal;
  if (s == "dag") return DecompKind::Dag;
  if (s == "kelly") return DecompKind::Kelly;
  throw std::invalid_argument("unknown decomposition kind \"" + s +
                              "\" (expected arboreal, dag, or kelly)");
}

namespace {

std::vector<int> union_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

void write_ids(std::ostringstream& os, const std::vector<int>& ids) {
  for (int v : ids) os << ' ' << v;
}

}  // namespace

int width(const ArborealDecomposition& d) {
  int w = 0;
  for (int i : d.nodes) {
    std::vector<int> bag = d.node_bags.at(i);
    for (const auto& [e, a] : d.arc_bags)
      if (e.first == i || e.second == i) bag = union_of(bag, a);
    w = std::max(w, static_cast<int>(bag.size()) - 1);
  }
  return w;
}

int width(const DagDecomposition& d) {
  int w = 0;
  for (const auto& [i, bag] : d.bags)
    w = std::max(w, static_cast<int>(bag.size()));
  return w;
}

int width(const KellyDecomposition& d) {
  int w = 0;
  for (int i : d.nodes)
    w = std::max(w, static_cast<int>(
                        union_of(d.node_bags.at(i), d.guard_bags.at(i)).size()));
  return w;
}

DecompKind kind_of(const Decomposition& d) {
  if (std::holds_alternative<ArborealDecomposition>(d))
    return DecompKind::Arboreal;
  if (std::holds_alternative<DagDecomposition>(d)) return DecompKind::Dag;
  return DecompKind::Kelly;
}

int width(const Decomposition& d) {
  return std::visit([](const auto& x) { return width(x); }, d);
}

int width(const DecompositionBundle& b) {
  int w = 0;
  for (const auto& part : b.parts) w = std::max(w, width(part));
  return w;
}

std::string serialize_decomposition(const Decomposition& d) {
  std::ostringstream os;
  if (const auto* a = std::get_if<ArborealDecomposition>(&d)) {
    os << "arboreal " << a->nodes.size() << '\n';
    for (int i : a->nodes) {
      os << "node " << i << " W:";
      write_ids(os, a->node_bags.at(i));
      os << '\n';
    }
    for (const auto& e : a->arcs) {
      os << "arc " << e.first << ' ' << e.second << " A:";
      write_ids(os, a->arc_bags.at(e));
      os << '\n';
    }
  } else if (const auto* g = std::get_if<DagDecomposition>(&d)) {
    os << "dag " << g->nodes.size() << '\n';
    for (int i : g->nodes) {
      os << "node " << i << " X:";
      write_ids(os, g->bags.at(i));
      os << '\n';
    }
    for (const auto& e : g->arcs)
      os << "arc " << e.first << ' ' << e.second << '\n';
  } else {
    const auto& k = std::get<KellyDecomposition>(d);
    os << "kelly " << k.nodes.size() << '\n';
    for (int i : k.nodes) {
      os << "node " << i << " W:";
      write_ids(os, k.node_bags.at(i));
      os << " X:";
      write_ids(os, k.guard_bags.at(i));
      os << '\n';
    }
    for (const auto& e : k.arcs)
      os << "arc " << e.first << ' ' << e.second << '\n';
    os << "roots";
    write_ids(os, k.root_order);
    os << '\n';
    for (int i : k.nodes) {
      auto it = k.child_order.find(i);
      if (it == k.child_order.end() || it->second.empty()) continue;
      os << "order " << i << ':';
      write_ids(os, it->second);
      os << '\n';
    }
  }
  return os.str();
}

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> toks;
};

bool content_line(const std::string& s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c != '#';
  }
  return false;
}

std::vector<Line> read_lines(std::istream& is) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    if (!content_line(raw)) continue;
    Line l;
    l.no = no;
    std::istringstream ls(raw);
    std::string t;
    while (ls >> t) l.toks.push_back(t);
    out.push_back(std::move(l));
  }
  return out;
}

int parse_id(const Line& l, const std::string& tok) {
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw ParseError(l.no, "expected an integer, got \"" + tok + "\"");
  for (size_t j = i; j < tok.size(); ++j)
    if (tok[j] < '0' || tok[j] > '9')
      throw ParseError(l.no, "expected an integer, got \"" + tok + "\"");
  long long v = std::stoll(tok);
  if (v < 0 || v > 1'000'000'000)
    throw ParseError(l.no, "id out of range: " + tok);
  return static_cast<int>(v);
}

// Ids from toks[from..), sorted, rejecting duplicates.
std::vector<int> parse_bag(const Line& l, size_t from, size_t to) {
  std::vector<int> out;
  for (size_t i = from; i < to; ++i) out.push_back(parse_id(l, l.toks[i]));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError(l.no, "duplicate vertex in bag");
  return out;
}

size_t find_marker(const Line& l, const std::string& marker, size_t from) {
  for (size_t i = from; i < l.toks.size(); ++i)
    if (l.toks[i] == marker) return i;
  throw ParseError(l.no, "missing \"" + marker + "\" marker");
}

Decomposition parse_decomposition_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty decomposition document");
  const Line& head = lines[0];
  if (head.toks.size() != 2)
    throw ParseError(head.no, "malformed header, expected \"<kind> <nodes>\"");
  DecompKind kind;
  try {
    kind = decomp_kind_from_string(head.toks[0]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head.no, e.what());
  }
  int declared = parse_id(head, head.toks[1]);

  std::vector<int> nodes;
  std::vector<Arc> arcs;
  std::map<int, std::vector<int>> node_bags, guard_bags, child_order;
  std::map<Arc, std::vector<int>> arc_bags;
  std::vector<int> root_order;
  bool saw_roots = false;

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& kw = l.toks[0];
    if (kw == "node") {
      if (l.toks.size() < 2) throw ParseError(l.no, "node line missing id");
      int id = parse_id(l, l.toks[1]);
      if (std::find(nodes.begin(), nodes.end(), id) != nodes.end())
        throw ParseError(l.no, "duplicate node id");
      nodes.push_back(id);
      if (kind == DecompKind::Arboreal) {
        size_t w = find_marker(l, "W:", 2);
        if (w != 2) throw ParseError(l.no, "expected \"W:\" after node id");
        node_bags[id] = parse_bag(l, w + 1, l.toks.size());
      } else if (kind == DecompKind::Dag) {
        size_t x = find_marker(l, "X:", 2);
        if (x != 2) throw ParseError(l.no, "expected \"X:\" after node id");
        node_bags[id] = parse_bag(l, x + 1, l.toks.size());
      } else {
        size_t w = find_marker(l, "W:", 2);
        if (w != 2) throw ParseError(l.no, "expected \"W:\" after node id");
        size_t x = find_marker(l, "X:", w + 1);
        node_bags[id] = parse_bag(l, w + 1, x);
        guard_bags[id] = parse_bag(l, x + 1, l.toks.size());
      }
    } else if (kw == "arc") {
      if (l.toks.size() < 3) throw ParseError(l.no, "arc line needs two node ids");
      int u = parse_id(l, l.toks[1]);
      int v = parse_id(l, l.toks[2]);
      if (kind == DecompKind::Arboreal) {
        size_t a = find_marker(l, "A:", 3);
        if (a != 3) throw ParseError(l.no, "expected \"A:\" after arc endpoints");
        arc_bags[{u, v}] = parse_bag(l, a + 1, l.toks.size());
      } else if (l.toks.size() != 3) {
        throw ParseError(l.no, "unexpected tokens after arc endpoints");
      }
      if (std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end())
        throw ParseError(l.no, "duplicate arc");
      arcs.emplace_back(u, v);
    } else if (kw == "roots" && kind == DecompKind::Kelly) {
      if (saw_roots) throw ParseError(l.no, "duplicate roots line");
      saw_roots = true;
      for (size_t i = 1; i < l.toks.size(); ++i)
        root_order.push_back(parse_id(l, l.toks[i]));
    } else if (kw == "order" && kind == DecompKind::Kelly) {
      if (l.toks.size() < 2 || l.toks[1].empty() || l.toks[1].back() != ':')
        throw ParseError(l.no, "malformed order line, expected \"order <id>:\"");
      int id = parse_id(l, l.toks[1].substr(0, l.toks[1].size() - 1));
      if (child_order.count(id))
        throw ParseError(l.no, "duplicate order line for node");
      std::vector<int> seq;
      for (size_t i = 2; i < l.toks.size(); ++i)
        seq.push_back(parse_id(l, l.toks[i]));
      child_order[id] = std::move(seq);
    } else {
      throw ParseError(l.no, "unexpected keyword \"" + kw + "\"");
    }
  }

  if (static_cast<int>(nodes.size()) != declared) {
    std::ostringstream os;
    os << "header declared " << declared << " nodes but " << nodes.size()
       << " node lines found";
    throw ParseError(head.no, os.str());
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(arcs.begin(), arcs.end());
  auto known = [&](int id) {
    return std::binary_search(nodes.begin(), nodes.end(), id);
  };
  for (const auto& [u, v] : arcs)
    if (!known(u) || !known(v))
      throw ParseError(0, "arc references an undeclared node");
  for (const auto& [id, seq] : child_order) {
    if (!known(id)) throw ParseError(0, "order line for an undeclared node");
    for (int c : seq)
      if (!known(c)) throw ParseError(0, "order line lists an undeclared node");
  }
  for (int r : root_order)
    if (!known(r)) throw ParseError(0, "roots line lists an undeclared node");

  if (kind == DecompKind::Arboreal) {
    ArborealDecomposition d;
    d.nodes = nodes;
    d.arcs = arcs;
    d.node_bags = std::move(node_bags);
    d.arc_bags = std::move(arc_bags);
    return d;
  }
  if (kind == DecompKind::Dag) {
    DagDecomposition d;
    d.nodes = nodes;
    d.arcs = arcs;
    d.bags = std::move(node_bags);
    return d;
  }
  KellyDecomposition d;
  d.nodes = nodes;
  d.arcs = arcs;
  d.node_bags = std::move(node_bags);
  d.guard_bags = std::move(guard_bags);
  d.child_order = std::move(child_order);
  if (saw_roots) {
    d.root_order = std::move(root_order);
  } else {
    std::set<int> with_in;
    for (const auto& [u, v] : d.arcs) with_in.insert(v);
    for (int i : d.nodes)
      if (!with_in.count(i)) d.root_order.push_back(i);
  }
  return d;
}

}  // namespace

Decomposition parse_decomposition(std::istream& is) {
  return parse_decomposition_lines(read_lines(is));
}

Decomposition parse_decomposition(const std::string& text) {
  std::istringstream is(text);
  return parse_decomposition(is);
}

std::string serialize_bundle(const DecompositionBundle& b) {
  std::ostringstream os;
  os << "bundle " << to_string(b.kind) << ' ' << b.parts.size() << '\n';
  for (size_t i = 0; i < b.parts.size(); ++i) {
    os << "scc " << i << " vertices:";
    write_ids(os, b.scc_vertices[i]);
    os << '\n';
    os << serialize_decomposition(b.parts[i]);
  }
  return os.str();
}

DecompositionBundle parse_bundle(std::istream& is) {
  auto lines = read_lines(is);
  if (lines.empty()) throw ParseError(0, "empty bundle document");
  const Line& head = lines[0];
  if (head.toks.size() != 3 || head.toks[0] != "bundle")
    throw ParseError(head.no,
                     "malformed header, expected \"bundle <kind> <sections>\"");
  DecompositionBundle b;
  try {
    b.kind = decomp_kind_from_string(head.toks[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head.no, e.what());
  }
  int sections = parse_id(head, head.toks[2]);

  size_t li = 1;
  for (int s = 0; s < sections; ++s) {
    if (li >= lines.size() || lines[li].toks[0] != "scc")
      throw ParseError(li < lines.size() ? lines[li].no : 0,
                       "expected \"scc <index> vertices:\" section header");
    const Line& sl = lines[li];
    if (sl.toks.size() < 3 || sl.toks[2] != "vertices:")
      throw ParseError(sl.no, "malformed scc line");
    if (parse_id(sl, sl.toks[1]) != s)
      throw ParseError(sl.no, "scc sections must be numbered consecutively");
    b.scc_vertices.push_back(parse_bag(sl, 3, sl.toks.size()));
    ++li;
    std::vector<Line> section;
    while (li < lines.size() && lines[li].toks[0] != "scc")
      section.push_back(lines[li++]);
    Decomposition part = parse_decomposition_lines(section);
    if (kind_of(part) != b.kind)
      throw ParseError(section.empty() ? sl.no : section[0].no,
                       "section kind disagrees with bundle kind");
    b.parts.push_back(std::move(part));
  }
  if (li != lines.size())
    throw ParseError(lines[li].no, "unexpected content after last section");
  return b;
}

DecompositionBundle parse_bundle(const std::string& text) {
  std::istringstream is(text);
  return parse_bundle(is);
}

bool looks_like_bundle(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    if (!content_line(raw)) continue;
    std::istringstream ls(raw);
    std::string t;
    ls >> t;
    return t == "bundle";
  }
  return false;
}

}  // namespace circwidth
