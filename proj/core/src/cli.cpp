#include "circwidth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "circwidth/builders.hpp"
#include "circwidth/dfs.hpp"
#include "circwidth/generate.hpp"
#include "circwidth/validate.hpp"

namespace circwidth::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

Digraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_digraph(f);
}

// Maps node ids and bag vertices of a builder-produced part (local SCC ids)
// back to the original vertex ids.
struct UpMap {
  const std::vector<int>& verts;
  int operator()(int v) const { return verts[v]; }
  std::vector<int> bag(const std::vector<int>& b) const {
    std::vector<int> out;
    for (int v : b) out.push_back(verts[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

Decomposition relabel_up(const Decomposition& d, const std::vector<int>& verts) {
  UpMap m{verts};
  if (const auto* a = std::get_if<ArborealDecomposition>(&d)) {
    ArborealDecomposition out;
    for (int i : a->nodes) out.nodes.push_back(m(i));
    std::sort(out.nodes.begin(), out.nodes.end());
    for (auto [u, v] : a->arcs) out.arcs.emplace_back(m(u), m(v));
    std::sort(out.arcs.begin(), out.arcs.end());
    for (const auto& [i, b] : a->node_bags) out.node_bags[m(i)] = m.bag(b);
    for (const auto& [e, b] : a->arc_bags)
      out.arc_bags[{m(e.first), m(e.second)}] = m.bag(b);
    return out;
  }
  if (const auto* g = std::get_if<DagDecomposition>(&d)) {
    DagDecomposition out;
    for (int i : g->nodes) out.nodes.push_back(m(i));
    std::sort(out.nodes.begin(), out.nodes.end());
    for (auto [u, v] : g->arcs) out.arcs.emplace_back(m(u), m(v));
    std::sort(out.arcs.begin(), out.arcs.end());
    for (const auto& [i, b] : g->bags) out.bags[m(i)] = m.bag(b);
    return out;
  }
  const auto& k = std::get<KellyDecomposition>(d);
  KellyDecomposition out;
  for (int i : k.nodes) out.nodes.push_back(m(i));
  std::sort(out.nodes.begin(), out.nodes.end());
  for (auto [u, v] : k.arcs) out.arcs.emplace_back(m(u), m(v));
  std::sort(out.arcs.begin(), out.arcs.end());
  for (const auto& [i, b] : k.node_bags) out.node_bags[m(i)] = m.bag(b);
  for (const auto& [i, b] : k.guard_bags) out.guard_bags[m(i)] = m.bag(b);
  for (const auto& [i, seq] : k.child_order) {
    std::vector<int> mapped;
    for (int c : seq) mapped.push_back(m(c));
    out.child_order[m(i)] = std::move(mapped);
  }
  for (int r : k.root_order) out.root_order.push_back(m(r));
  return out;
}

// Maps bag vertices of a bundle section (original ids) down to the induced
// subgraph's local ids. Node ids are labels and stay as they are.
struct DownMap {
  const std::vector<int>& verts;  // sorted original ids
  int operator()(int v) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v)
      throw std::invalid_argument("bag vertex outside its scc section");
    return static_cast<int>(it - verts.begin());
  }
  std::vector<int> bag(const std::vector<int>& b) const {
    std::vector<int> out;
    for (int v : b) out.push_back((*this)(v));
    std::sort(out.begin(), out.end());
    return out;
  }
};

Decomposition relabel_down(const Decomposition& d,
                           const std::vector<int>& verts) {
  DownMap m{verts};
  if (const auto* a = std::get_if<ArborealDecomposition>(&d)) {
    ArborealDecomposition out = *a;
    for (auto& [i, b] : out.node_bags) b = m.bag(b);
    for (auto& [e, b] : out.arc_bags) b = m.bag(b);
    return out;
  }
  if (const auto* g = std::get_if<DagDecomposition>(&d)) {
    DagDecomposition out = *g;
    for (auto& [i, b] : out.bags) b = m.bag(b);
    return out;
  }
  KellyDecomposition out = std::get<KellyDecomposition>(d);
  for (auto& [i, b] : out.node_bags) b = m.bag(b);
  for (auto& [i, b] : out.guard_bags) b = m.bag(b);
  return out;
}

const char* pass_str(bool b) { return b ? "pass" : "fail"; }

void print_report(std::ostream& out, const std::string& prefix,
                  const ValidationReport& r) {
  for (const auto& c : r.checks) {
    out << prefix << c.axiom << ' ' << pass_str(c.pass);
    if (!c.pass) out << "  witness: " << c.witness;
    out << '\n';
  }
}

}  // namespace

DecompositionBundle decompose_graph(const Digraph& g, DecompKind kind,
                                    int root) {
  auto sccs = strongly_connected_components(g);
  if (root >= 0) {
    if (root >= g.n) throw std::invalid_argument("root out of range");
    if (sccs.components.size() != 1)
      throw std::invalid_argument(
          "an explicit root needs a strongly connected graph; use auto");
  }
  DecompositionBundle b;
  b.kind = kind;
  for (const auto& comp : sccs.components) {
    auto sub = induced_subgraph(g, comp);
    int local_root = 0;
    if (root >= 0) {
      auto it = std::lower_bound(sub.vertices.begin(), sub.vertices.end(), root);
      local_root = static_cast<int>(it - sub.vertices.begin());
    }
    auto f = build_dfs_tree(sub.graph, local_root);
    auto idx = build_back_edge_index(sub.graph, f);
    b.scc_vertices.push_back(sub.vertices);
    b.parts.push_back(relabel_up(build(kind, f, idx), sub.vertices));
  }
  return b;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    FamilySpec spec{family_from_string(args.family), args.n, args.seed};
    std::string text = serialize_digraph(gen(spec));
    if (args.output.empty())
      out << text;
    else
      write_file(args.output, text);
    return 0;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << '\n';
    return 2;
  }
}

int cmd_dfs(const DfsArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Digraph g = load_graph(args.graph);
    DfsForest f = build_dfs_tree(g, args.root);
    out << "root " << f.root << '\n';
    out << "order";
    for (int v : f.order) out << ' ' << v;
    out << '\n';
    for (size_t i = 0; i < f.arcs.size(); ++i)
      out << f.arcs[i].first << ' ' << f.arcs[i].second << ' '
          << to_string(f.arc_kind[i]) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "dfs: " << e.what() << '\n';
    return 2;
  }
}

int cmd_circ(const CircArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Digraph g = load_graph(args.graph);
    auto r = circumference(g, args.guard);
    out << "l = " << r.length << '\n';
    out << "witness =";
    for (int v : r.witness) out << ' ' << v;
    out << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "circ: " << e.what() << '\n';
    return 2;
  }
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err) {
  try {
    Digraph g = load_graph(args.graph);
    DecompKind kind = decomp_kind_from_string(args.kind);
    int root = -1;
    if (args.root != "auto") {
      size_t used = 0;
      root = std::stoi(args.root, &used);
      if (used != args.root.size() || root < 0)
        throw std::invalid_argument("--root must be \"auto\" or a vertex id");
    }
    DecompositionBundle b = decompose_graph(g, kind, root);
    std::string doc = serialize_bundle(b);
    if (args.output.empty())
      out << doc;
    else
      write_file(args.output, doc);

    std::ostringstream summary;
    summary << "kind=" << to_string(kind) << " sccs=" << b.parts.size()
            << " width=" << width(b);
    if (!args.no_circ) {
      auto c = circumference(g);
      summary << " circ=" << c.length << " bound_ok="
              << (width(b) <= c.length + 1 ? "true" : "false");
    }
    out << summary.str() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "decompose: " << e.what() << '\n';
    return 2;
  }
}

int cmd_validate(const ValidateArgs& args, std::ostream& out,
                 std::ostream& err) {
  try {
    Digraph g = load_graph(args.graph);
    std::string text = read_file(args.decomposition);
    bool all_ok = true;
    int total_width = 0;

    if (looks_like_bundle(text)) {
      DecompositionBundle b = parse_bundle(text);
      if (!args.kind.empty() &&
          decomp_kind_from_string(args.kind) != b.kind)
        throw std::invalid_argument("--kind disagrees with the bundle file");
      out << "bundle kind=" << to_string(b.kind)
          << " sections=" << b.parts.size() << '\n';

      // Sections must partition the vertices ...
      std::vector<int> count(g.n, 0);
      bool partition_ok = true;
      std::string partition_note;
      for (const auto& sec : b.scc_vertices)
        for (int v : sec) {
          if (v < 0 || v >= g.n) {
            partition_ok = false;
            partition_note = "section vertex out of range";
          } else if (++count[v] > 1) {
            partition_ok = false;
            std::ostringstream os;
            os << "vertex " << v << " appears in two sections";
            partition_note = os.str();
          }
        }
      for (int v = 0; v < g.n && partition_ok; ++v)
        if (count[v] == 0) {
          partition_ok = false;
          std::ostringstream os;
          os << "vertex " << v << " is in no section";
          partition_note = os.str();
        }
      out << "partition " << pass_str(partition_ok);
      if (!partition_ok) out << "  witness: " << partition_note;
      out << '\n';
      if (!partition_ok) {
        out << "result fail\n";
        return 1;
      }

      // ... and every split into earlier (sink-side) and later sections
      // must be a directed union with all cross arcs into the earlier part.
      bool union_ok = true;
      for (size_t t = 1; t < b.scc_vertices.size() && union_ok; ++t) {
        std::vector<int> sink_side, source_side;
        for (size_t i = 0; i < b.scc_vertices.size(); ++i) {
          auto& side = i < t ? sink_side : source_side;
          side.insert(side.end(), b.scc_vertices[i].begin(),
                      b.scc_vertices[i].end());
        }
        if (!is_directed_union(g, source_side, sink_side)) union_ok = false;
      }
      out << "directed-union " << pass_str(union_ok) << '\n';
      all_ok = union_ok;

      for (size_t i = 0; i < b.parts.size(); ++i) {
        auto sub = induced_subgraph(g, b.scc_vertices[i]);
        auto part = relabel_down(b.parts[i], sub.vertices);
        auto report = validate(sub.graph, part);
        std::ostringstream prefix;
        prefix << "scc " << i << ' ';
        print_report(out, prefix.str(), report);
        total_width = std::max(total_width, report.width);
        if (!report.ok()) all_ok = false;
      }
    } else {
      Decomposition d = parse_decomposition(text);
      if (!args.kind.empty() &&
          decomp_kind_from_string(args.kind) != kind_of(d))
        throw std::invalid_argument("--kind disagrees with the file");
      out << "kind=" << to_string(kind_of(d)) << '\n';
      auto report = validate(g, d);
      print_report(out, "", report);
      total_width = report.width;
      all_ok = report.ok();
    }
    out << "width " << total_width << '\n';
    out << "result " << (all_ok ? "pass" : "fail") << '\n';
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    err << "validate: " << e.what() << '\n';
    return 2;
  }
}

std::string survey_csv_header() {
  return "id,n,m,circ,width_arboreal,width_dag,width_kelly,"
         "valid_arboreal,valid_dag,valid_kelly,all_valid,"
         "slack_arboreal,slack_dag,slack_kelly";
}

std::string to_csv(const SurveyRow& r) {
  std::ostringstream os;
  os << r.id << ',' << r.n << ',' << r.m << ',' << r.circ << ','
     << r.width_arboreal << ',' << r.width_dag << ',' << r.width_kelly << ','
     << r.valid_arboreal << ',' << r.valid_dag << ',' << r.valid_kelly << ','
     << r.all_valid << ',' << r.slack_arboreal << ',' << r.slack_dag << ','
     << r.slack_kelly;
  return os.str();
}

std::vector<SurveyRow> parse_survey_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<SurveyRow> rows;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      if (line != survey_csv_header())
        throw ParseError(1, "unexpected survey CSV header");
      first = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 14)
      throw ParseError(0, "survey CSV row must have 14 columns");
    SurveyRow r;
    r.id = cells[0];
    r.n = std::stoi(cells[1]);
    r.m = std::stoi(cells[2]);
    r.circ = std::stoi(cells[3]);
    r.width_arboreal = std::stoi(cells[4]);
    r.width_dag = std::stoi(cells[5]);
    r.width_kelly = std::stoi(cells[6]);
    r.valid_arboreal = cells[7] == "1";
    r.valid_dag = cells[8] == "1";
    r.valid_kelly = cells[9] == "1";
    r.all_valid = cells[10] == "1";
    r.slack_arboreal = std::stoi(cells[11]);
    r.slack_dag = std::stoi(cells[12]);
    r.slack_kelly = std::stoi(cells[13]);
    rows.push_back(std::move(r));
  }
  if (first) throw ParseError(0, "empty survey CSV");
  return rows;
}

int cmd_survey(const SurveyArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<Family> families;
    if (args.families.empty()) {
      families = all_families();
    } else {
      for (const auto& name : args.families)
        families.push_back(family_from_string(name));
    }
    std::vector<int> sizes = args.sizes;
    if (sizes.empty())
      for (int n = 2; n <= 8; ++n) sizes.push_back(n);
    if (args.count < 1) throw std::invalid_argument("--count must be >= 1");

    std::vector<SurveyRow> rows;
    std::vector<std::string> notes;
    std::uint64_t attempt = 0;
    for (Family fam : families) {
      for (int n : sizes) {
        for (int c = 0; c < args.count; ++c) {
          std::uint64_t seed = args.seed + attempt++;
          std::ostringstream id;
          id << to_string(fam) << "-n" << n << "-s" << seed;
          Digraph g;
          try {
            g = gen({fam, n, seed});
          } catch (const std::invalid_argument&) {
            continue;  // size not supported by this family (e.g. cycle n<2)
          }
          SurveyRow row;
          row.id = id.str();
          row.n = g.n;
          row.m = g.m();
          try {
            row.circ = circumference(g).length;
          } catch (const SizeGuardError& e) {
            notes.push_back("SKIPPED " + row.id + ": " + e.what());
            continue;
          }

          for (DecompKind kind :
               {DecompKind::Arboreal, DecompKind::Dag, DecompKind::Kelly}) {
            DecompositionBundle b = decompose_graph(g, kind);
            bool valid = true;
            std::vector<std::string> failures;
            for (size_t i = 0; i < b.parts.size(); ++i) {
              auto sub = induced_subgraph(g, b.scc_vertices[i]);
              auto part = relabel_down(b.parts[i], sub.vertices);
              auto report = validate(sub.graph, part);
              for (const auto& chk : report.checks)
                if (!chk.pass) {
                  valid = false;
                  failures.push_back(chk.axiom + " (" + chk.witness + ")");
                }
            }
            int w = width(b);
            int slack = row.circ + 1 - w;
            switch (kind) {
              case DecompKind::Arboreal:
                row.width_arboreal = w;
                row.valid_arboreal = valid;
                row.slack_arboreal = slack;
                break;
              case DecompKind::Dag:
                row.width_dag = w;
                row.valid_dag = valid;
                row.slack_dag = slack;
                break;
              case DecompKind::Kelly:
                row.width_kelly = w;
                row.valid_kelly = valid;
                row.slack_kelly = slack;
                break;
            }
            if (!valid) {
              std::string fname =
                  "counterexample-" + row.id + "-" + to_string(kind) + ".txt";
              std::ostringstream doc;
              doc << "# " << to_string(kind)
                  << " construction violated its axioms on " << row.id << '\n';
              for (const auto& fmsg : failures) doc << "# failed: " << fmsg << '\n';
              doc << "# decomposition (per-scc roots are each section's "
                     "smallest vertex):\n";
              std::istringstream bundle_text(serialize_bundle(b));
              std::string bline;
              while (std::getline(bundle_text, bline))
                doc << "#   " << bline << '\n';
              doc << serialize_digraph(g);
              write_file(fname, doc.str());
              std::ostringstream note;
              note << "INVALID " << row.id << ' ' << to_string(kind) << ": ";
              for (size_t i = 0; i < failures.size(); ++i)
                note << (i ? "; " : "") << failures[i];
              note << " -> " << fname;
              notes.push_back(note.str());
            }
          }
          row.all_valid =
              row.valid_arboreal && row.valid_dag && row.valid_kelly;
          rows.push_back(std::move(row));
        }
      }
    }

    out << std::left << std::setw(34) << "id" << std::right << std::setw(4)
        << "n" << std::setw(5) << "m" << std::setw(6) << "circ" << std::setw(7)
        << "w_arb" << std::setw(7) << "w_dag" << std::setw(7) << "w_kel"
        << std::setw(7) << "valid" << std::setw(7) << "s_arb" << std::setw(7)
        << "s_dag" << std::setw(7) << "s_kel" << '\n';
    for (const auto& r : rows)
      out << std::left << std::setw(34) << r.id << std::right << std::setw(4)
          << r.n << std::setw(5) << r.m << std::setw(6) << r.circ
          << std::setw(7) << r.width_arboreal << std::setw(7) << r.width_dag
          << std::setw(7) << r.width_kelly << std::setw(7)
          << (r.all_valid ? "yes" : "NO") << std::setw(7) << r.slack_arboreal
          << std::setw(7) << r.slack_dag << std::setw(7) << r.slack_kelly
          << '\n';
    for (const auto& note : notes) out << note << '\n';

    if (!rows.empty()) {
      int ma = rows[0].slack_arboreal, md = rows[0].slack_dag,
          mk = rows[0].slack_kelly;
      for (const auto& r : rows) {
        ma = std::min(ma, r.slack_arboreal);
        md = std::min(md, r.slack_dag);
        mk = std::min(mk, r.slack_kelly);
      }
      out << "min_slack arboreal=" << ma << " dag=" << md << " kelly=" << mk
          << '\n';
    }

    if (!args.output.empty()) {
      std::ostringstream csv;
      csv << survey_csv_header() << '\n';
      for (const auto& r : rows) csv << to_csv(r) << '\n';
      write_file(args.output, csv.str());
    }
    return notes.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "survey: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace circwidth::cli
