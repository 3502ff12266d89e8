#pragma once

#include <string>

#include "btrl/treedef/document.hpp"

namespace btrl::harness {

// The built-in tree for each scenario.
//
// Scenario 1 (basic rules): a Priority root tries, in order, a MemSequence
// that rescues a present victim, a MemSequence that fights a detected fire
// with a learning extinguisher leaf, and a room change as the fallback.
//
// Scenario 2 (detailed rules): the root is a single learning composite
// that chooses between rescuing, the learning extinguisher leaf, and a
// room change, observing only whether a victim and a fire are present.
treedef::TreeDocument scenario_tree(int scenario);

// Canonical text of the same document (what serialize_tree_document gives).
std::string scenario_tree_text(int scenario);

// Node ids of the learning nodes inside the built-in trees.
inline constexpr const char* kExtinguisherNodeId = "extinguisher";
inline constexpr const char* kSelectorNodeId = "selector";

}  // namespace btrl::harness
