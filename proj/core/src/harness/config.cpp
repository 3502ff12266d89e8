#include "btrl/harness/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace btrl::harness {
namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

double as_double(const json& value, const char* field) {
  if (!value.is_number()) bad_config(std::string(field) + " must be a number");
  return value.get<double>();
}

int as_int(const json& value, const char* field) {
  if (!value.is_number_integer()) {
    bad_config(std::string(field) + " must be an integer");
  }
  return value.get<int>();
}

void apply_learner_block(const json& block, const char* where,
                         rl::LearnerParams& params) {
  if (!block.is_object()) bad_config(std::string(where) + " must be an object");
  for (const auto& [key, value] : block.items()) {
    if (key == "alpha") {
      params.alpha = as_double(value, "alpha");
    } else if (key == "gamma") {
      params.gamma = as_double(value, "gamma");
    } else if (key == "epsilon_start") {
      params.epsilon_start = as_double(value, "epsilon_start");
    } else if (key == "epsilon_decay") {
      params.epsilon_decay = as_double(value, "epsilon_decay");
    } else if (key == "epsilon_floor") {
      params.epsilon_floor = as_double(value, "epsilon_floor");
    } else {
      bad_config(std::string(where) + " has unknown field '" + key + "'");
    }
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (scenario != 1 && scenario != 2) bad_config("scenario must be 1 or 2");
  if (trials < 1) bad_config("trials must be at least 1");
  if (iterations < 1) bad_config("iterations must be at least 1");
  if (accuracy_window < 1) bad_config("window must be at least 1");
  if (victim_probability < 0.0 || victim_probability > 1.0 ||
      fire_probability < 0.0 || fire_probability > 1.0) {
    bad_config("probabilities must be in [0, 1]");
  }
  action_learner.validate();
  composite_learner.validate();
}

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_config(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) bad_config("top level must be an object");

  ExperimentConfig config;
  for (const auto& [key, value] : root.items()) {
    if (key == "scenario") {
      config.scenario = as_int(value, "scenario");
    } else if (key == "trials") {
      config.trials = as_int(value, "trials");
    } else if (key == "iterations") {
      config.iterations = as_int(value, "iterations");
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        bad_config("seed must be an integer");
      }
      config.master_seed = value.get<std::uint64_t>();
    } else if (key == "learner") {
      apply_learner_block(value, "learner", config.action_learner);
      apply_learner_block(value, "learner", config.composite_learner);
    } else if (key == "action_learner") {
      apply_learner_block(value, "action_learner", config.action_learner);
    } else if (key == "composite_learner") {
      apply_learner_block(value, "composite_learner",
                          config.composite_learner);
    } else if (key == "update_on_interrupt") {
      if (!value.is_boolean()) bad_config("update_on_interrupt must be a bool");
      config.update_on_interrupt = value.get<bool>();
    } else if (key == "victim_probability") {
      config.victim_probability = as_double(value, "victim_probability");
    } else if (key == "fire_probability") {
      config.fire_probability = as_double(value, "fire_probability");
    } else if (key == "window") {
      config.accuracy_window = as_int(value, "window");
    } else if (key == "baseline") {
      if (!value.is_boolean()) bad_config("baseline must be a bool");
      config.baseline = value.get<bool>();
    } else if (key == "tree") {
      if (!value.is_string()) bad_config("tree must be a path string");
      config.tree_path = value.get<std::string>();
    } else if (key == "out") {
      if (!value.is_string()) bad_config("out must be a path string");
      config.output_dir = value.get<std::string>();
    } else {
      bad_config("unknown field '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("config: cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace btrl::harness
