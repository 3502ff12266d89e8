#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "btrl/harness/config.hpp"
#include "btrl/harness/experiment.hpp"
#include "btrl/harness/outputs.hpp"
#include "btrl/harness/scenario_trees.hpp"
#include "btrl/treedef/document.hpp"

using namespace btrl;
using harness::ExperimentConfig;
using harness::NodeSeries;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixture_text(const char* name) {
  return read_file(std::filesystem::path(BTRL_FIXTURE_DIR) / name);
}

// Small but non-trivial run used by the determinism tests.
ExperimentConfig small_run() {
  ExperimentConfig config;
  config.scenario = 2;
  config.trials = 3;
  config.iterations = 60;
  config.master_seed = 7;
  return config;
}

}  // namespace

TEST_CASE("an empty config file yields the stock protocol") {
  const ExperimentConfig config = harness::parse_config("{}");
  CHECK(config.scenario == 1);
  CHECK(config.trials == 30);
  CHECK(config.iterations == 400);
  CHECK(config.master_seed == 12);
  CHECK(config.action_learner.alpha == 0.5);
  CHECK(config.action_learner.gamma == 0.9);
  CHECK(config.action_learner.epsilon_start == 1.0);
  CHECK(config.action_learner.epsilon_decay == 0.95);
  CHECK(config.action_learner.epsilon_floor == 0.01);
  CHECK(config.composite_learner.alpha == 0.05);
  CHECK(config.composite_learner.epsilon_start == 0.3);
  CHECK(config.composite_learner.epsilon_decay == 0.85);
  CHECK(config.update_on_interrupt);
  CHECK(config.victim_probability == 0.5);
  CHECK(config.fire_probability == 0.5);
  CHECK(config.accuracy_window == 20);
  CHECK_FALSE(config.baseline);
  CHECK(config.tree_path.empty());
  CHECK(config.output_dir.empty());
}

TEST_CASE("every field can be overridden from JSON") {
  const ExperimentConfig config = harness::parse_config(R"({
    "scenario": 2,
    "trials": 5,
    "iterations": 50,
    "seed": 99,
    "learner": {"alpha": 0.25, "gamma": 0.8},
    "action_learner": {"epsilon_start": 0.6},
    "composite_learner": {"epsilon_floor": 0.05},
    "update_on_interrupt": false,
    "victim_probability": 0.25,
    "fire_probability": 0.75,
    "window": 10,
    "baseline": true,
    "tree": "my_tree.json",
    "out": "results"
  })");
  CHECK(config.scenario == 2);
  CHECK(config.trials == 5);
  CHECK(config.iterations == 50);
  CHECK(config.master_seed == 99);
  // "learner" touched both nodes; the specific blocks refined one each.
  CHECK(config.action_learner.alpha == 0.25);
  CHECK(config.action_learner.gamma == 0.8);
  CHECK(config.action_learner.epsilon_start == 0.6);
  CHECK(config.composite_learner.alpha == 0.25);
  CHECK(config.composite_learner.gamma == 0.8);
  CHECK(config.composite_learner.epsilon_floor == 0.05);
  CHECK_FALSE(config.update_on_interrupt);
  CHECK(config.victim_probability == 0.25);
  CHECK(config.fire_probability == 0.75);
  CHECK(config.accuracy_window == 10);
  CHECK(config.baseline);
  CHECK(config.tree_path == "my_tree.json");
  CHECK(config.output_dir == "results");
}

TEST_CASE("malformed configs are rejected with a reason") {
  auto rejects = [](const char* text) {
    CHECK_THROWS_AS(harness::parse_config(text), std::invalid_argument);
  };
  rejects("not json at all");
  rejects("[1, 2]");
  rejects(R"({"no_such_field": 1})");
  rejects(R"({"learner": {"momentum": 0.9}})");
  rejects(R"({"scenario": "one"})");
  rejects(R"({"scenario": 3})");
  rejects(R"({"trials": 0})");
  rejects(R"({"iterations": 0})");
  rejects(R"({"window": 0})");
  rejects(R"({"seed": "abc"})");
  rejects(R"({"baseline": "yes"})");
  rejects(R"({"victim_probability": 1.5})");
  rejects(R"({"learner": {"alpha": 0.0}})");
  rejects(R"({"learner": {"gamma": 1.5}})");
}

TEST_CASE("config files load from disk and report a missing path") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "btrl_config_test.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << R"({"scenario": 2, "trials": 4})";
  }
  const ExperimentConfig config = harness::load_config_file(path.string());
  CHECK(config.scenario == 2);
  CHECK(config.trials == 4);
  fs::remove(path);

  CHECK_THROWS_WITH_AS(
      harness::load_config_file("/no/such/config.json"),
      doctest::Contains("/no/such/config.json"), std::invalid_argument);
}

TEST_CASE("trial seeds are reproducible and do not collide") {
  std::set<std::uint64_t> seen;
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t s = harness::trial_seed(12, t);
    CHECK(s == harness::trial_seed(12, t));
    seen.insert(s);
  }
  CHECK(seen.size() == 200);
  CHECK(harness::trial_seed(12, 0) != harness::trial_seed(13, 0));
}

TEST_CASE("built-in trees match their canonical fixtures byte for byte") {
  CHECK(harness::scenario_tree_text(1) == fixture_text("scenario1.bt3.json"));
  CHECK(harness::scenario_tree_text(2) == fixture_text("scenario2.bt3.json"));
  CHECK(treedef::serialize_tree_document(harness::scenario_tree(1))
        == harness::scenario_tree_text(1));
  CHECK(treedef::serialize_tree_document(harness::scenario_tree(2))
        == harness::scenario_tree_text(2));
  CHECK_THROWS_AS(harness::scenario_tree(3), std::invalid_argument);
}

TEST_CASE("windowed accuracy slides over the pooled tallies") {
  NodeSeries series;
  series.samples = {1, 1, 0, 1};
  series.correct = {1, 0, 0, 1};
  CHECK(harness::windowed_accuracy(series, 2)
        == std::vector<double>{1.0, 0.5, 0.0, 1.0});

  // An empty window keeps showing the last known value.
  NodeSeries sparse;
  sparse.samples = {0, 0, 1};
  sparse.correct = {0, 0, 1};
  CHECK(harness::windowed_accuracy(sparse, 1)
        == std::vector<double>{0.0, 0.0, 1.0});

  CHECK_THROWS_AS(harness::windowed_accuracy(series, 0),
                  std::invalid_argument);
}

TEST_CASE("pooled accuracy clamps its iteration range") {
  NodeSeries series;
  series.samples = {1, 1, 0, 1};
  series.correct = {1, 0, 0, 1};
  CHECK(series.pooled_accuracy(1, 4) == doctest::Approx(2.0 / 3));
  CHECK(series.pooled_accuracy(1, 2) == 0.5);
  CHECK(series.pooled_accuracy(3, 4) == 1.0);
  CHECK(series.pooled_accuracy(-10, 100) == doctest::Approx(2.0 / 3));
  CHECK(series.pooled_accuracy(3, 3) == 0.0);  // no samples in range
}

TEST_CASE("equal configs give equal results") {
  ExperimentConfig config = small_run();
  config.baseline = true;
  const auto first = harness::run_experiment(config);
  const auto second = harness::run_experiment(config);

  CHECK(first.trace_lines == second.trace_lines);
  CHECK(first.behavior_accuracy == second.behavior_accuracy);
  REQUIRE(first.trials.size() == second.trials.size());
  for (std::size_t i = 0; i < first.trials.size(); ++i) {
    CHECK(first.trials[i].seed == second.trials[i].seed);
    CHECK(first.trials[i].behavior_accuracy
          == second.trials[i].behavior_accuracy);
  }
  REQUIRE(first.nodes.size() == second.nodes.size());
  for (const auto& [node, series] : first.nodes) {
    const auto it = second.nodes.find(node);
    REQUIRE(it != second.nodes.end());
    CHECK(series.samples == it->second.samples);
    CHECK(series.correct == it->second.correct);
  }
  for (const auto& [node, series] : first.baseline_nodes) {
    const auto it = second.baseline_nodes.find(node);
    REQUIRE(it != second.baseline_nodes.end());
    CHECK(series.samples == it->second.samples);
    CHECK(series.correct == it->second.correct);
  }
}

TEST_CASE("running the control pass does not disturb the learners") {
  const ExperimentConfig quiet = small_run();
  ExperimentConfig with_control = small_run();
  with_control.baseline = true;

  const auto alone = harness::run_experiment(quiet);
  const auto observed = harness::run_experiment(with_control);

  CHECK(alone.trace_lines == observed.trace_lines);
  CHECK(alone.behavior_accuracy == observed.behavior_accuracy);
  for (const auto& [node, series] : alone.nodes) {
    const auto it = observed.nodes.find(node);
    REQUIRE(it != observed.nodes.end());
    CHECK(series.samples == it->second.samples);
    CHECK(series.correct == it->second.correct);
  }
  CHECK_FALSE(observed.baseline_nodes.empty());
  CHECK(alone.baseline_nodes.empty());
}

TEST_CASE("trace lines parse as JSON and carry the full protocol") {
  ExperimentConfig config = small_run();
  const auto results = harness::run_experiment(config);
  REQUIRE(results.trace_lines.size()
          == static_cast<std::size_t>(config.trials * config.iterations));

  int decisions_seen = 0;
  int episodes_seen = 0;
  for (std::size_t i = 0; i < results.trace_lines.size(); ++i) {
    const auto line = nlohmann::json::parse(results.trace_lines[i]);
    const int trial = line.at("trial").get<int>();
    const int iteration = line.at("iteration").get<int>();
    CHECK(trial == static_cast<int>(i) / config.iterations);
    CHECK(iteration == static_cast<int>(i) % config.iterations + 1);
    const std::string expected = line.at("expected").get<std::string>();
    CHECK((expected == "save_victim" || expected == "use_extinguisher"
           || expected == "change_room"));
    CHECK(line.at("activated").is_array());
    CHECK(line.at("matched").is_boolean());
    for (const auto& d : line.at("decisions")) {
      ++decisions_seen;
      CHECK(d.at("node").is_string());
      CHECK(d.at("state").is_array());
      CHECK(d.at("chosen").get<int>() >= 0);
      CHECK(d.at("greedy").is_boolean());
    }
    for (const auto& e : line.at("episodes")) {
      ++episodes_seen;
      CHECK(e.at("tau").get<int>() >= 1);
      CHECK(e.at("updated").is_boolean());
      const std::string outcome = e.at("outcome").get<std::string>();
      CHECK((outcome == "SUCCESS" || outcome == "FAILURE"
             || outcome == "INTERRUPTED"));
    }
  }
  // Decisions open episodes, so at least as many were taken as were closed.
  CHECK(decisions_seen > 0);
  CHECK(episodes_seen > 0);
  CHECK(decisions_seen >= episodes_seen);
}

TEST_CASE("under the basic rules every expected behavior runs from tick one") {
  ExperimentConfig config;
  config.scenario = 1;
  config.trials = 2;
  config.iterations = 80;
  config.master_seed = 3;
  const auto results = harness::run_experiment(config);
  for (const auto& trial : results.trials) {
    CHECK(trial.behavior_accuracy[0] == 1.0);
    CHECK(trial.behavior_accuracy[1] == 1.0);
    CHECK(trial.behavior_accuracy[2] == 1.0);
  }
}

TEST_CASE("result files are byte-identical across runs") {
  namespace fs = std::filesystem;
  ExperimentConfig config = small_run();
  config.baseline = true;
  auto results = harness::run_experiment(config);

  const fs::path base = fs::temp_directory_path() / "btrl_out_test";
  fs::remove_all(base);
  const std::array<const char*, 4> files{"accuracy.csv", "behaviors.csv",
                                         "trace.jsonl", "plot.gp"};

  results.config.output_dir = (base / "a").string();
  harness::write_outputs(results);
  results.config.output_dir = (base / "b").string();
  harness::write_outputs(results);

  for (const char* name : files) {
    const std::string a = read_file(base / "a" / name);
    const std::string b = read_file(base / "b" / name);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
  }
  fs::remove_all(base);
}
