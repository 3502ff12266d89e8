#include "btrl/harness/scenario_trees.hpp"

#include <stdexcept>

namespace btrl::harness {
namespace {

treedef::NodeSpec leaf(const std::string& id, const std::string& kind,
                       const std::string& title) {
  treedef::NodeSpec spec;
  spec.id = id;
  spec.kind = kind;
  spec.title = title;
  return spec;
}

treedef::NodeSpec extinguisher_leaf(const std::string& reward) {
  treedef::NodeSpec spec =
      leaf(kExtinguisherNodeId, "LearningAction", "pick an extinguisher");
  spec.properties.emplace("actions", std::string("A,B,C"));
  spec.properties.emplace("executor", std::string("use_extinguisher"));
  spec.properties.emplace("reward", reward);
  spec.properties.emplace("state", std::string("fire_type"));
  return spec;
}

treedef::TreeDocument basic_rules_tree() {
  treedef::TreeDocument doc;
  doc.title = "fire response, basic rules";
  doc.root_id = "root";

  treedef::NodeSpec root;
  root.id = "root";
  root.kind = "Priority";
  root.has_children_field = true;
  root.children = {"victim-seq", "fire-seq", "change"};

  treedef::NodeSpec victim_seq;
  victim_seq.id = "victim-seq";
  victim_seq.kind = "MemSequence";
  victim_seq.has_children_field = true;
  victim_seq.children = {"is-victim", "save"};

  treedef::NodeSpec fire_seq;
  fire_seq.id = "fire-seq";
  fire_seq.kind = "MemSequence";
  fire_seq.has_children_field = true;
  fire_seq.children = {"is-fire", kExtinguisherNodeId};

  doc.nodes.emplace("root", std::move(root));
  doc.nodes.emplace("victim-seq", std::move(victim_seq));
  doc.nodes.emplace("fire-seq", std::move(fire_seq));
  doc.nodes.emplace("is-victim", leaf("is-victim", "IsVictim", ""));
  doc.nodes.emplace("save", leaf("save", "SaveVictim", ""));
  doc.nodes.emplace("is-fire", leaf("is-fire", "IsFire", ""));
  doc.nodes.emplace(kExtinguisherNodeId,
                    extinguisher_leaf("extinguisher_basic"));
  doc.nodes.emplace("change", leaf("change", "ChangeRoom", ""));
  return doc;
}

treedef::TreeDocument detailed_rules_tree() {
  treedef::TreeDocument doc;
  doc.title = "fire response, detailed rules";
  doc.root_id = kSelectorNodeId;

  treedef::NodeSpec selector;
  selector.id = kSelectorNodeId;
  selector.kind = "LearningComposite";
  selector.title = "pick a behavior";
  selector.has_children_field = true;
  selector.children = {"save", kExtinguisherNodeId, "change"};
  selector.properties.emplace("reward", std::string("room_behavior"));
  selector.properties.emplace("state", std::string("victim_fire"));

  doc.nodes.emplace(kSelectorNodeId, std::move(selector));
  doc.nodes.emplace("save", leaf("save", "SaveVictim", ""));
  doc.nodes.emplace(kExtinguisherNodeId,
                    extinguisher_leaf("extinguisher_detailed"));
  doc.nodes.emplace("change", leaf("change", "ChangeRoom", ""));
  return doc;
}

}  // namespace

treedef::TreeDocument scenario_tree(int scenario) {
  if (scenario == 1) return basic_rules_tree();
  if (scenario == 2) return detailed_rules_tree();
  throw std::invalid_argument("scenario must be 1 or 2");
}

std::string scenario_tree_text(int scenario) {
  return serialize_tree_document(scenario_tree(scenario));
}

}  // namespace btrl::harness
