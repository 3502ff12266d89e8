// Command-line front end: runs the learning experiment and writes the
// result files. Example:
//
//   btrl run --scenario 2 --trials 30 --iterations 400 --seed 7 --out results
//
// A JSON config file can set any option (--config); explicit flags win.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "btrl/harness/config.hpp"
#include "btrl/harness/experiment.hpp"
#include "btrl/harness/outputs.hpp"

namespace {

void print_summary(const btrl::harness::ExperimentResults& results) {
  const auto& config = results.config;
  std::cout << "scenario " << config.scenario << ", " << config.trials
            << " trials x " << config.iterations << " iterations, seed "
            << config.master_seed << "\n";
  std::cout << "behavior usage accuracy (mean over trials):\n";
  for (int b = 0; b < 3; ++b) {
    std::cout << "  " << btrl::sim::to_string(static_cast<btrl::sim::Behavior>(b))
              << ": "
              << btrl::harness::format_fixed(
                     results.behavior_accuracy[static_cast<std::size_t>(b)])
              << "\n";
  }
  const int last_from = std::max(1, config.iterations - 99);
  std::cout << "decision accuracy, last " << (config.iterations - last_from + 1)
            << " iterations pooled:\n";
  for (const auto& [node, series] : results.nodes) {
    std::cout << "  " << node << ": "
              << btrl::harness::format_fixed(
                     series.pooled_accuracy(last_from, config.iterations))
              << "\n";
  }
  for (const auto& [node, series] : results.baseline_nodes) {
    std::cout << "  random " << node << ": "
              << btrl::harness::format_fixed(
                     series.pooled_accuracy(last_from, config.iterations))
              << "\n";
  }
  if (!config.output_dir.empty()) {
    std::cout << "wrote accuracy.csv, behaviors.csv, trace.jsonl, plot.gp to "
              << config.output_dir << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavior-tree reinforcement learning experiments"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run an experiment");

  std::string config_path;
  std::optional<int> scenario;
  std::optional<int> trials;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> tree_path;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  bool baseline = false;

  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--scenario", scenario, "scenario to run (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  run->add_option("--trials", trials, "independent trials")
      ->check(CLI::PositiveNumber);
  run->add_option("--iterations", iterations, "tree ticks per trial")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "master seed");
  run->add_option("--out", out_dir, "output directory for result files");
  run->add_option("--tree", tree_path, "tree document overriding the built-in");
  run->add_option("--alpha", alpha, "learning rate for both learning nodes");
  run->add_option("--gamma", gamma, "discount factor for both learning nodes");
  run->add_option("--epsilon", epsilon,
                  "initial exploration rate for both learning nodes");
  run->add_flag("--baseline", baseline,
                "also run the uniform-random control with the same seeds");

  CLI11_PARSE(app, argc, argv);

  try {
    btrl::harness::ExperimentConfig config;
    if (!config_path.empty()) {
      config = btrl::harness::load_config_file(config_path);
    }
    if (scenario) config.scenario = *scenario;
    if (trials) config.trials = *trials;
    if (iterations) config.iterations = *iterations;
    if (seed) config.master_seed = *seed;
    if (out_dir) config.output_dir = *out_dir;
    if (tree_path) config.tree_path = *tree_path;
    if (alpha) {
      config.action_learner.alpha = *alpha;
      config.composite_learner.alpha = *alpha;
    }
    if (gamma) {
      config.action_learner.gamma = *gamma;
      config.composite_learner.gamma = *gamma;
    }
    if (epsilon) {
      config.action_learner.epsilon_start = *epsilon;
      config.composite_learner.epsilon_start = *epsilon;
    }
    if (baseline) config.baseline = true;
    config.validate();

    print_summary(btrl::harness::run_experiment(config));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
