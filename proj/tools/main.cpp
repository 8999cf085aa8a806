// circwidth: build, measure, and validate digraph decompositions whose
// width is certified against the graph's circumference.

#include <iostream>

#include "CLI11.hpp"
#include "circwidth/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "digraph structural width toolkit: DFS-based arboreal, dag, and kelly "
      "decompositions, exact circumference, and axiom validation"};
  app.require_subcommand(1);

  namespace cli = circwidth::cli;
  cli::GenArgs gen_args;
  cli::DfsArgs dfs_args;
  cli::CircArgs circ_args;
  cli::DecomposeArgs dec_args;
  cli::ValidateArgs val_args;
  cli::SurveyArgs survey_args;

  auto* gen = app.add_subcommand("gen", "generate a graph from a family");
  gen->add_option("--family", gen_args.family,
                  "cycle, bidirected-complete, bidirected-from-undirected, "
                  "random-scc, random-dag, tournament")
      ->required();
  gen->add_option("--n", gen_args.n, "number of vertices")->required();
  gen->add_option("--seed", gen_args.seed, "rng seed (default 1)");
  gen->add_option("--output", gen_args.output, "write to file (default stdout)");

  auto* dfs = app.add_subcommand(
      "dfs", "print the dfs tree and arc classification of a strongly "
             "connected graph");
  dfs->add_option("--graph", dfs_args.graph, "edge-list file")->required();
  dfs->add_option("--root", dfs_args.root, "dfs root (default 0)");

  auto* circ =
      app.add_subcommand("circ", "exact circumference with a cycle witness");
  circ->add_option("--graph", circ_args.graph, "edge-list file")->required();
  circ->add_option("--guard", circ_args.guard,
                   "largest scc size accepted (default 20, max 31)");

  auto* dec = app.add_subcommand(
      "decompose", "build a decomposition of each strongly connected "
                   "component and report width against circumference");
  dec->add_option("--graph", dec_args.graph, "edge-list file")->required();
  dec->add_option("--kind", dec_args.kind, "arboreal, dag, or kelly")
      ->required();
  dec->add_option("--root", dec_args.root,
                  "dfs root: \"auto\" (each scc's smallest vertex) or a "
                  "vertex id (strongly connected graphs only)");
  dec->add_flag("--no-circ", dec_args.no_circ,
                "skip the circumference computation in the summary");
  dec->add_option("--output", dec_args.output,
                  "write the decomposition document to a file");

  auto* val = app.add_subcommand(
      "validate", "check every decomposition axiom against a graph");
  val->add_option("--graph", val_args.graph, "edge-list file")->required();
  val->add_option("--decomposition", val_args.decomposition,
                  "decomposition or bundle document")
      ->required();
  val->add_option("--kind", val_args.kind,
                  "expected kind (optional; must match the file)");

  auto* survey = app.add_subcommand(
      "survey", "sweep families and sizes, validating every construction and "
                "reporting width slack against circumference");
  survey->add_option("--family", survey_args.families,
                     "family to include (repeatable; default all)");
  survey->add_option("--n", survey_args.sizes,
                     "size to include (repeatable; default 2..8)");
  survey->add_option("--count", survey_args.count,
                     "instances per family and size (default 1)");
  survey->add_option("--seed", survey_args.seed, "base seed (default 1)");
  survey->add_option("--output", survey_args.output, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's exit codes to the documented contract: 0 for --help,
    // 2 for any usage error.
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) return cli::cmd_gen(gen_args, std::cout, std::cerr);
  if (dfs->parsed()) return cli::cmd_dfs(dfs_args, std::cout, std::cerr);
  if (circ->parsed()) return cli::cmd_circ(circ_args, std::cout, std::cerr);
  if (dec->parsed()) return cli::cmd_decompose(dec_args, std::cout, std::cerr);
  if (val->parsed()) return cli::cmd_validate(val_args, std::cout, std::cerr);
  if (survey->parsed())
    return cli::cmd_survey(survey_args, std::cout, std::cerr);
  return 2;
}
