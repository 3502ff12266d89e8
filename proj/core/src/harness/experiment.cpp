#include "btrl/harness/experiment.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "btrl/bt/tree.hpp"
#include "btrl/harness/outputs.hpp"
#include "btrl/harness/scenario_trees.hpp"
#include "btrl/rl/random.hpp"
#include "btrl/sim/bindings.hpp"
#include "btrl/treedef/registry.hpp"

namespace btrl::harness {
namespace {

struct DecisionEntry {
  std::string node;
  rl::DiscreteState state;
  int chosen = -1;
  bool greedy = false;
  bool counted = false;  // excluded from accuracy when no ground truth exists
  bool correct = false;
};

struct EpisodeEntry {
  std::string node;
  int tau = 0;
  double reward = 0.0;
  bt::NodeStatus outcome = bt::NodeStatus::RUNNING;
  bool interrupted = false;
  bool updated = false;
};

void append_json_string(std::string& out, std::string_view text) {
  out += '"';
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

NodeSeries& series_for(std::map<std::string, NodeSeries>& all,
                       const std::string& node, int iterations) {
  auto it = all.find(node);
  if (it == all.end()) {
    NodeSeries series;
    series.node = node;
    series.samples.assign(static_cast<std::size_t>(iterations), 0);
    series.correct.assign(static_cast<std::size_t>(iterations), 0);
    it = all.emplace(node, std::move(series)).first;
  }
  return it->second;
}

std::string trace_line(int trial, int iteration, sim::Behavior expected,
                       const std::array<bool, 3>& activated, bool matched,
                       bt::NodeStatus root_status,
                       const std::vector<DecisionEntry>& decisions,
                       const std::vector<EpisodeEntry>& episodes) {
  std::string out = "{\"trial\": " + std::to_string(trial) +
                    ", \"iteration\": " + std::to_string(iteration) +
                    ", \"expected\": ";
  append_json_string(out, sim::to_string(expected));
  out += ", \"activated\": [";
  bool first = true;
  for (int b = 0; b < 3; ++b) {
    if (!activated[static_cast<std::size_t>(b)]) continue;
    if (!first) out += ", ";
    first = false;
    append_json_string(out, sim::to_string(static_cast<sim::Behavior>(b)));
  }
  out += "], \"matched\": ";
  out += matched ? "true" : "false";
  out += ", \"root\": ";
  append_json_string(out, bt::to_string(root_status));
  out += ", \"decisions\": [";
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const DecisionEntry& d = decisions[i];
    if (i > 0) out += ", ";
    out += "{\"node\": ";
    append_json_string(out, d.node);
    out += ", \"state\": [";
    for (std::size_t f = 0; f < d.state.size(); ++f) {
      if (f > 0) out += ", ";
      out += std::to_string(d.state[f]);
    }
    out += "], \"chosen\": " + std::to_string(d.chosen);
    out += ", \"greedy\": ";
    out += d.greedy ? "true" : "false";
    out += ", \"correct\": ";
    out += d.counted ? (d.correct ? "true" : "false") : "null";
    out += '}';
  }
  out += "], \"episodes\": [";
  for (std::size_t i = 0; i < episodes.size(); ++i) {
    const EpisodeEntry& e = episodes[i];
    if (i > 0) out += ", ";
    out += "{\"node\": ";
    append_json_string(out, e.node);
    out += ", \"tau\": " + std::to_string(e.tau);
    out += ", \"reward\": " + format_number(e.reward);
    out += ", \"outcome\": ";
    append_json_string(out, e.interrupted ? "INTERRUPTED"
                                          : bt::to_string(e.outcome));
    out += ", \"updated\": ";
    out += e.updated ? "true" : "false";
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace

double NodeSeries::pooled_accuracy(int from, int to) const {
  std::int64_t total = 0;
  std::int64_t right = 0;
  const int n = static_cast<int>(samples.size());
  for (int it = std::max(from, 1); it <= std::min(to, n); ++it) {
    total += samples[static_cast<std::size_t>(it - 1)];
    right += correct[static_cast<std::size_t>(it - 1)];
  }
  return total == 0 ? 0.0
                    : static_cast<double>(right) / static_cast<double>(total);
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
  return rl::mix_seed(master_seed, static_cast<std::uint64_t>(trial_index));
}

TrialSummary run_trial(const ExperimentConfig& config, int trial_index,
                       bool baseline_pass,
                       std::map<std::string, NodeSeries>& node_series,
                       std::vector<std::string>* trace_lines) {
  const std::uint64_t seed = trial_seed(config.master_seed, trial_index);
  rl::SeedSequence seq(seed);

  sim::SimConfig sim_config;
  sim_config.scenario = config.scenario;
  sim_config.victim_probability = config.victim_probability;
  sim_config.fire_probability = config.fire_probability;
  sim_config.seed = seq.next();
  const std::uint64_t node_seed_base = seq.next();

  sim::SimState sim(sim_config);

  std::vector<DecisionEntry> tick_decisions;
  std::vector<EpisodeEntry> tick_episodes;
  std::map<std::string, std::string> learning_kind;  // node id -> kind

  sim::FireBindings bindings;
  bindings.action_params = config.action_learner;
  bindings.composite_params = config.composite_learner;
  bindings.policy = baseline_pass ? learning::ActingPolicy::kUniformRandom
                                  : learning::ActingPolicy::kEpsilonGreedy;
  bindings.update_on_interrupt = config.update_on_interrupt;
  bindings.seed_base = node_seed_base;
  bindings.on_decision = [&](const learning::DecisionRecord& r) {
    DecisionEntry entry;
    entry.node = r.node;
    entry.state = r.state;
    entry.chosen = r.chosen;
    entry.greedy = r.greedy;
    auto it = learning_kind.find(r.node);
    if (it != learning_kind.end() && it->second == "LearningAction") {
      // Extinguisher pick: scored against the hidden mapping, but only
      // when the recorded state names an actual fire type.
      if (!r.state.empty() && r.state[0] != 0) {
        entry.counted = true;
        entry.correct =
            r.chosen ==
            static_cast<int>(sim.hidden_map().correct_for(r.state[0]));
      }
    } else if (it != learning_kind.end() &&
               it->second == "LearningComposite") {
      entry.counted = true;
      entry.correct = r.chosen == static_cast<int>(sim::expected_behavior(
                                      sim.observe()));
    }
    tick_decisions.push_back(std::move(entry));
  };
  bindings.on_episode = [&](const learning::EpisodeRecord& r) {
    tick_episodes.push_back({r.node, r.tau, r.discounted_reward, r.outcome,
                             r.interrupted, r.updated});
  };

  const treedef::TreeDocument doc =
      config.tree_path.empty() ? scenario_tree(config.scenario)
                               : treedef::load_tree_file(config.tree_path);
  treedef::NodeRegistry registry = treedef::NodeRegistry::with_core_kinds();
  sim::register_fire_kinds(registry, bindings);
  bt::BehaviorTree tree = treedef::build_tree(doc, registry);
  tree.for_each([&](bt::Node& node) {
    if (node.kind() == "LearningAction" ||
        node.kind() == "LearningComposite") {
      const std::string key = node.name().empty() ? node.kind() : node.name();
      learning_kind[key] = node.kind();
      series_for(node_series, key, config.iterations);
    }
  });

  bt::Blackboard blackboard;
  bt::TickContext ctx{blackboard, &sim, nullptr, 0};

  TrialSummary summary;
  summary.index = trial_index;
  summary.seed = seed;

  for (int iteration = 1; iteration <= config.iterations; ++iteration) {
    const sim::Observation obs = sim.observe();
    const sim::Behavior expected = sim::expected_behavior(obs);
    sim.mark_tick();
    tick_decisions.clear();
    tick_episodes.clear();

    const bt::NodeStatus root_status = tree.tick(ctx);

    std::array<bool, 3> activated{false, false, false};
    for (sim::Behavior b : sim.behaviors_since_mark()) {
      activated[static_cast<std::size_t>(b)] = true;
    }
    const auto expected_index = static_cast<std::size_t>(expected);
    summary.expected_count[expected_index] += 1;
    const bool matched = activated[expected_index];
    if (matched) summary.matched_count[expected_index] += 1;

    for (const DecisionEntry& d : tick_decisions) {
      if (!d.counted) continue;
      NodeSeries& series = series_for(node_series, d.node, config.iterations);
      series.samples[static_cast<std::size_t>(iteration - 1)] += 1;
      if (d.correct) {
        series.correct[static_cast<std::size_t>(iteration - 1)] += 1;
      }
    }

    if (trace_lines != nullptr) {
      trace_lines->push_back(trace_line(trial_index, iteration, expected,
                                        activated, matched, root_status,
                                        tick_decisions, tick_episodes));
    }
  }

  for (std::size_t b = 0; b < 3; ++b) {
    if (summary.expected_count[b] == 0) {
      summary.behavior_accuracy[b] = 1.0;
      std::clog << "trial " << trial_index << ": behavior '"
                << sim::to_string(static_cast<sim::Behavior>(b))
                << "' was never expected; accuracy is vacuously 1.0\n";
    } else {
      summary.behavior_accuracy[b] =
          static_cast<double>(summary.matched_count[b]) /
          static_cast<double>(summary.expected_count[b]);
    }
  }
  return summary;
}

ExperimentResults run_experiment(const ExperimentConfig& config) {
  config.validate();

  ExperimentResults results;
  results.config = config;

  for (int t = 0; t < config.trials; ++t) {
    results.trials.push_back(
        run_trial(config, t, false, results.nodes, &results.trace_lines));
  }
  std::array<double, 3> totals{0.0, 0.0, 0.0};
  for (const TrialSummary& trial : results.trials) {
    for (std::size_t b = 0; b < 3; ++b) {
      totals[b] += trial.behavior_accuracy[b];
    }
  }
  for (std::size_t b = 0; b < 3; ++b) {
    results.behavior_accuracy[b] = totals[b] / config.trials;
  }

  if (config.baseline) {
    for (int t = 0; t < config.trials; ++t) {
      run_trial(config, t, true, results.baseline_nodes, nullptr);
    }
  }

  if (!config.output_dir.empty()) {
    write_outputs(results);
  }
  return results;
}

std::vector<double> windowed_accuracy(const NodeSeries& series, int window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  const int n = static_cast<int>(series.samples.size());
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  double previous = 0.0;
  for (int t = 1; t <= n; ++t) {
    std::int64_t total = 0;
    std::int64_t right = 0;
    for (int i = std::max(1, t - window + 1); i <= t; ++i) {
      total += series.samples[static_cast<std::size_t>(i - 1)];
      right += series.correct[static_cast<std::size_t>(i - 1)];
    }
    if (total > 0) {
      previous = static_cast<double>(right) / static_cast<double>(total);
    }
    out[static_cast<std::size_t>(t - 1)] = previous;
  }
  return out;
}

}  // namespace btrl::harness
