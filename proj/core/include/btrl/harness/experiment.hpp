#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "btrl/harness/config.hpp"
#include "btrl/sim/fire_sim.hpp"

namespace btrl::harness {

// Per-iteration decision tally for one learning node, pooled over trials:
// samples[i] decisions were taken at iteration i+1, correct[i] of them
// matched the ground truth. Extinguisher picks are only sampled when a fire
// was present (there is no right handle for an empty room).
struct NodeSeries {
  std::string node;
  std::vector<std::int64_t> samples;
  std::vector<std::int64_t> correct;

  // Pooled accuracy over the 1-based iteration range [from, to].
  double pooled_accuracy(int from, int to) const;
};

struct TrialSummary {
  int index = 0;
  std::uint64_t seed = 0;
  // Of the iterations where the ground truth expected a behavior, the share
  // in which that behavior actually ran. 1.0 when never expected.
  std::array<double, 3> behavior_accuracy{1.0, 1.0, 1.0};
  std::array<std::int64_t, 3> expected_count{0, 0, 0};
  std::array<std::int64_t, 3> matched_count{0, 0, 0};
};

struct ExperimentResults {
  ExperimentConfig config;

  std::vector<TrialSummary> trials;
  // Mean of the per-trial behavior accuracies, one entry per Behavior.
  std::array<double, 3> behavior_accuracy{0.0, 0.0, 0.0};

  // Keyed by node id; one series per learning node, plus the same series
  // for the uniform-random control when the baseline pass was requested.
  std::map<std::string, NodeSeries> nodes;
  std::map<std::string, NodeSeries> baseline_nodes;

  // One JSON object per (trial, iteration), in order.
  std::vector<std::string> trace_lines;
};

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index);

// Runs one trial and folds its tallies into the accumulators. Exposed so
// tests can run single trials; run_experiment is the loop over trials.
TrialSummary run_trial(const ExperimentConfig& config, int trial_index,
                       bool baseline_pass,
                       std::map<std::string, NodeSeries>& node_series,
                       std::vector<std::string>* trace_lines);

ExperimentResults run_experiment(const ExperimentConfig& config);

// Sliding-window accuracy series over pooled samples: value at iteration t
// covers [max(1, t-window+1), t]; iterations with an empty window repeat
// the previous value (0 at the start).
std::vector<double> windowed_accuracy(const NodeSeries& series, int window);

}  // namespace btrl::harness
