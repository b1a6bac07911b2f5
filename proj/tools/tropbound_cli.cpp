#include <iostream>

#include <CLI11.hpp>

#include "tropbound/cli.hpp"

int main(int argc, char **argv) {
  tropbound::CliConfig config;
  CLI::App app{"Upper bounds and tropical counts for log invariants of "
               "(P^k, boundary)"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--seed", config.seed, "Seed for point sampling")
        ->capture_default_str();
    sub->add_option("--out", config.out_dir, "Output directory");
    sub->add_option("--format", config.format, "text, json, csv or svg")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
        ->capture_default_str();
  };

  auto *bound = app.add_subcommand("bound", "Evaluate the upper bound");
  bound->add_option("--input", config.input, "Tangency JSON")->required();
  add_common(bound);

  auto *exact = app.add_subcommand("exact", "Tropical count for k = 2");
  exact->add_option("--input", config.input, "Tangency JSON")->required();
  exact->add_option("--cap", config.cap, "Maximum number of legs")
      ->capture_default_str();
  add_common(exact);

  auto *nd = app.add_subcommand("nd", "Table of N_d as CSV");
  nd->add_option("--max-degree", config.max_degree, "Largest degree")
      ->capture_default_str();
  add_common(nd);

  auto *verify = app.add_subcommand("verify", "Bound versus exact checks");
  verify->add_option("--input", config.input, "Tangency JSON");
  verify->add_flag("--paper-suite", config.paper_suite,
                   "Run the catalogued examples");
  verify->add_flag("--random-three-leg", config.random_three_leg,
                   "Randomized three-leg determinant suite");
  verify->add_option("--trials", config.trials, "Random trials")
      ->capture_default_str();
  verify->add_option("--exact-trials", config.exact_trials,
                     "Random trials also counted tropically")
      ->capture_default_str();
  verify->add_option("--cap", config.cap, "Maximum number of legs")
      ->capture_default_str();
  add_common(verify);

  auto *render = app.add_subcommand("render", "SVG per tropical curve");
  render->add_option("--input", config.input, "Tangency JSON")->required();
  render->add_option("--cap", config.cap, "Maximum number of legs")
      ->capture_default_str();
  add_common(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return tropbound::run(config, std::cout, std::cerr);
}
