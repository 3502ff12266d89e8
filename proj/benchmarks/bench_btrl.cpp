#include <benchmark/benchmark.h>

#include <random>

#include "btrl/bt/tree.hpp"
#include "btrl/harness/config.hpp"
#include "btrl/harness/experiment.hpp"
#include "btrl/harness/scenario_trees.hpp"
#include "btrl/rl/qlearning.hpp"
#include "btrl/rl/qtable.hpp"
#include "btrl/rl/random.hpp"
#include "btrl/sim/bindings.hpp"
#include "btrl/sim/fire_sim.hpp"
#include "btrl/treedef/document.hpp"
#include "btrl/treedef/registry.hpp"

namespace {

using namespace btrl;

// One root tick of the built-in basic-rules tree against the live world,
// learning nodes included.
void BM_TreeTick(benchmark::State& state) {
  sim::SimState sim(sim::SimConfig{.scenario = 1, .seed = 42});
  sim::FireBindings bindings;
  auto registry = treedef::NodeRegistry::with_core_kinds();
  register_fire_kinds(registry, bindings);
  bt::BehaviorTree tree =
      treedef::build_tree(harness::scenario_tree(1), registry);
  bt::Blackboard blackboard;
  bt::TickContext ctx{blackboard, &sim};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree.tick(ctx));
  }
}
BENCHMARK(BM_TreeTick);

void BM_QUpdate(benchmark::State& state) {
  rl::QTable table(3);
  rl::LearnerParams params;
  std::mt19937_64 rng(1);
  int step = 0;
  for (auto _ : state) {
    const rl::DiscreteState s{step % 7, (step / 7) % 5};
    const rl::DiscreteState next{(step + 1) % 7, (step / 7) % 5};
    benchmark::DoNotOptimize(
        rl::q_update(table, s, step % 3, 1.5, next, params));
    ++step;
  }
}
BENCHMARK(BM_QUpdate);

void BM_QUpdateSmdp(benchmark::State& state) {
  rl::QTable table(3);
  rl::LearnerParams params;
  int step = 0;
  for (auto _ : state) {
    const rl::DiscreteState s{step % 7, (step / 7) % 5};
    const rl::DiscreteState next{(step + 1) % 7, (step / 7) % 5};
    benchmark::DoNotOptimize(
        rl::q_update_smdp(table, s, step % 3, 4.2, 3, next, params));
    ++step;
  }
}
BENCHMARK(BM_QUpdateSmdp);

void BM_SelectAction(benchmark::State& state) {
  rl::QTable table(3);
  rl::LearnerParams params;
  std::mt19937_64 rng(7);
  for (int s = 0; s < 16; ++s) {
    rl::q_update(table, {s % 4, s / 4}, s % 3, 0.5 * s, {s / 4, s % 4},
                 params);
  }
  int step = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rl::select_action(table, {step % 4, (step / 4) % 4}, 0.1, rng));
    ++step;
  }
}
BENCHMARK(BM_SelectAction);

void BM_ParseTreeDocument(benchmark::State& state) {
  const std::string text = harness::scenario_tree_text(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(treedef::parse_tree_document(text));
  }
}
BENCHMARK(BM_ParseTreeDocument);

void BM_SerializeTreeDocument(benchmark::State& state) {
  const treedef::TreeDocument doc = harness::scenario_tree(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(treedef::serialize_tree_document(doc));
  }
}
BENCHMARK(BM_SerializeTreeDocument);

// Room turnover: each change draws a fresh room from the generator.
void BM_GenerateRoom(benchmark::State& state) {
  sim::SimState sim(sim::SimConfig{.scenario = 2, .seed = 9});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim.apply_change_room());
  }
}
BENCHMARK(BM_GenerateRoom);

// A full 100-iteration detailed-rules trial, tree build included.
void BM_ScenarioTrial(benchmark::State& state) {
  harness::ExperimentConfig config;
  config.scenario = 2;
  config.trials = 1;
  config.iterations = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(harness::run_experiment(config));
  }
}
BENCHMARK(BM_ScenarioTrial);

}  // namespace

BENCHMARK_MAIN();
