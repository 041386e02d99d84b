#include <CLI11.hpp>

#include "starsep/cli.hpp"

int main(int argc, char** argv) {
  starsep::RunConfig cfg;
  std::string variant = "standard";
  std::string c = "1/2";

  CLI::App app{"Structure detection, balanced separators and certified tree decompositions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.output, "Write JSON here instead of standard output");

  auto with_t = [&](CLI::App* sub) {
    sub->add_option("--t", cfg.t, "Forbidden clique size (t >= 4)");
    sub->add_option("--variant", variant, "standard or star")->check(CLI::IsMember({"standard", "star"}));
  };
  auto with_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", cfg.weights, "Weights file or 'uniform'");
  };

  auto* recognize = app.add_subcommand("recognize", "Class membership with the first obstruction found");
  with_t(recognize);
  recognize->add_option("file", cfg.inputs, "Graph file")->required();

  auto* atoms = app.add_subcommand("atoms", "Clique-cutset atom decomposition");
  atoms->add_option("file", cfg.inputs, "Graph file")->required();

  auto* separations = app.add_subcommand("separations", "Unbalanced vertices, canonical separations, the A-order");
  with_weights(separations);
  separations->add_option("file", cfg.inputs, "Graph file")->required();

  auto* hubdiv = app.add_subcommand("hubdiv", "Hub division and central bag");
  with_t(hubdiv);
  with_weights(hubdiv);
  hubdiv->add_option("file", cfg.inputs, "Graph file")->required();

  auto* separator = app.add_subcommand("separator", "Certified balanced separator");
  with_t(separator);
  with_weights(separator);
  separator->add_option("--c", c, "Balance constant in [1/2, 1)");
  separator->add_option("file", cfg.inputs, "Graph file")->required();

  auto* decompose = app.add_subcommand("decompose", "Certified tree decomposition");
  with_t(decompose);
  decompose->add_option("file", cfg.inputs, "Graph file")->required();

  auto* exact = app.add_subcommand("exact-tw", "Exact treewidth (n <= 14, or STARSEP_MAX_N)");
  exact->add_option("file", cfg.inputs, "Graph file")->required();

  auto* verify = app.add_subcommand("verify-cert", "Re-validate a tree decomposition");
  verify->add_option("files", cfg.inputs, "Graph file and decomposition JSON")->required()->expected(2);

  auto* gen = app.add_subcommand("gen", "Write a named or random graph as edge-list JSON");
  with_t(gen);
  gen->add_option("--kind", cfg.kind, "Graph id or 'random'");
  gen->add_option("--n", cfg.n, "Vertex count for random graphs");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_flag("--plant-wheel", cfg.plant_wheel, "Start random graphs from an odd wheel");

  auto* batch = app.add_subcommand("batch", "Certify every graph file in a directory");
  with_t(batch);
  batch->add_option("--jobs", cfg.jobs, "Instances processed in parallel");
  batch->add_option("--seed", cfg.seed, "Seed recorded in the summary");
  batch->add_option("dir", cfg.inputs, "Directory of graph files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : starsep::exit_input;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.variant = variant == "star" ? starsep::ClassVariant::star : starsep::ClassVariant::standard;
  try {
    cfg.c = starsep::parse_ratio(c);
  } catch (const starsep::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return starsep::exit_input;
  }
  return starsep::run(cfg);
}
