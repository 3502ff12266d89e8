#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "btrl/bt/tree.hpp"
#include "btrl/sim/bindings.hpp"
#include "btrl/treedef/document.hpp"
#include "btrl/treedef/registry.hpp"

using namespace btrl;

namespace {

std::string read_fixture(const std::string& name) {
  const std::string path = std::string(BTRL_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

treedef::NodeRegistry full_registry() {
  sim::FireBindings bindings;
  auto registry = treedef::NodeRegistry::with_core_kinds();
  register_fire_kinds(registry, bindings);
  return registry;
}

treedef::TreeDefErrorCode code_of(const std::string& text,
                                  bool build = false) {
  try {
    const treedef::TreeDocument doc = treedef::parse_tree_document(text);
    if (build) {
      const auto registry = full_registry();
      treedef::build_tree(doc, registry);
    }
  } catch (const treedef::TreeDefError& e) {
    return e.code();
  }
  FAIL("expected the document to be rejected");
  return treedef::TreeDefErrorCode::kSyntaxError;
}

}  // namespace

TEST_CASE("canonical documents round-trip byte for byte") {
  for (const char* name : {"scenario1.bt3.json", "scenario2.bt3.json"}) {
    CAPTURE(name);
    const std::string text = read_fixture(name);
    const treedef::TreeDocument doc = treedef::parse_tree_document(text);
    CHECK(treedef::serialize_tree_document(doc) == text);
    CHECK(treedef::parse_tree_document(treedef::serialize_tree_document(doc))
          == doc);
  }
}

TEST_CASE("serialization is canonical regardless of input formatting") {
  // Same document as a messy one-liner with scrambled key order.
  const std::string messy =
      "{\"nodes\":{\"b\":{\"kind\":\"ChangeRoom\",\"id\":\"b\"},"
      "\"a\":{\"properties\":{\"count\":2},\"child\":\"b\","
      "\"kind\":\"Repeater\",\"title\":\"twice\"}},\"root\":\"a\"}";
  const std::string canonical = treedef::serialize_tree_document(
      treedef::parse_tree_document(messy));

  const std::string expected =
      "{\n"
      "  \"root\": \"a\",\n"
      "  \"nodes\": {\n"
      "    \"a\": {\n"
      "      \"id\": \"a\",\n"
      "      \"kind\": \"Repeater\",\n"
      "      \"title\": \"twice\",\n"
      "      \"child\": \"b\",\n"
      "      \"properties\": {\"count\": 2}\n"
      "    },\n"
      "    \"b\": {\n"
      "      \"id\": \"b\",\n"
      "      \"kind\": \"ChangeRoom\"\n"
      "    }\n"
      "  }\n"
      "}\n";
  CHECK(canonical == expected);
  CHECK(treedef::serialize_tree_document(
            treedef::parse_tree_document(canonical))
        == canonical);
}

TEST_CASE("property values keep their types through a round trip") {
  const std::string text =
      "{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\": \"X\", \"properties\":"
      " {\"flag\": true, \"count\": 3, \"rate\": 0.5, \"whole\": 2.0,"
      " \"label\": \"hi\"}}}}";
  const treedef::TreeDocument doc = treedef::parse_tree_document(text);
  const auto& props = doc.node("a").properties;
  CHECK(std::get<bool>(props.at("flag")) == true);
  CHECK(std::get<std::int64_t>(props.at("count")) == 3);
  CHECK(std::get<double>(props.at("rate")) == 0.5);
  // 2.0 written with a decimal point stays a double, not an integer.
  CHECK(std::get<double>(props.at("whole")) == 2.0);
  CHECK(std::get<std::string>(props.at("label")) == "hi");

  const treedef::TreeDocument again =
      treedef::parse_tree_document(treedef::serialize_tree_document(doc));
  CHECK(again == doc);
}

TEST_CASE("each malformed document is rejected with its own code") {
  using Code = treedef::TreeDefErrorCode;
  const struct {
    const char* fixture;
    Code code;
    bool build;
  } cases[] = {
      {"reject_syntax.bt3.json", Code::kSyntaxError, false},
      {"reject_document_shape.bt3.json", Code::kDocumentShape, false},
      {"reject_root_missing.bt3.json", Code::kRootMissing, false},
      {"reject_dangling_reference.bt3.json", Code::kDanglingReference, false},
      {"reject_multi_parent.bt3.json", Code::kMultiParent, false},
      {"reject_cycle.bt3.json", Code::kCycle, false},
      {"reject_unreachable.bt3.json", Code::kUnreachableNode, false},
      {"reject_arity.bt3.json", Code::kArityViolation, false},
      {"reject_unknown_kind.bt3.json", Code::kUnknownKind, true},
      {"reject_missing_property.bt3.json", Code::kMissingProperty, true},
      {"reject_property_type.bt3.json", Code::kPropertyTypeMismatch, true},
  };
  for (const auto& expected : cases) {
    CAPTURE(expected.fixture);
    CHECK(code_of(read_fixture(expected.fixture), expected.build)
          == expected.code);
  }
}

TEST_CASE("rejection codes carry readable names") {
  using Code = treedef::TreeDefErrorCode;
  CHECK(to_string(Code::kSyntaxError) == "syntax_error");
  CHECK(to_string(Code::kMultiParent) == "multi_parent");
  CHECK(to_string(Code::kPropertyTypeMismatch) == "property_type_mismatch");

  try {
    treedef::parse_tree_document("{");
    FAIL("unreachable");
  } catch (const treedef::TreeDefError& e) {
    CHECK(std::string(e.what()).find("syntax_error") != std::string::npos);
  }
}

TEST_CASE("shape violations found while parsing") {
  using Code = treedef::TreeDefErrorCode;
  // A node declaring an id different from its key.
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"id\": \"b\","
                " \"kind\": \"X\"}}}")
        == Code::kDocumentShape);
  // Unknown fields anywhere are rejected rather than ignored.
  CHECK(code_of("{\"root\": \"a\", \"extra\": 1, \"nodes\":"
                " {\"a\": {\"kind\": \"X\"}}}")
        == Code::kDocumentShape);
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\": \"X\","
                " \"color\": \"red\"}}}")
        == Code::kDocumentShape);
  // A node mixing both child forms.
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\": \"X\","
                " \"children\": [\"b\"], \"child\": \"b\"},"
                " \"b\": {\"kind\": \"X\"}}}")
        == Code::kArityViolation);
}

TEST_CASE("building enforces the kind's arity against the document") {
  using Code = treedef::TreeDefErrorCode;
  // A leaf kind given children.
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\":"
                " \"ChangeRoom\", \"children\": [\"b\"]},"
                " \"b\": {\"kind\": \"ChangeRoom\"}}}",
                /*build=*/true)
        == Code::kArityViolation);
  // A composite kind without a children list.
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\":"
                " \"Sequence\"}}}",
                /*build=*/true)
        == Code::kArityViolation);
  // A decorator kind without a child.
  CHECK(code_of("{\"root\": \"a\", \"nodes\": {\"a\": {\"kind\":"
                " \"Inverter\"}}}",
                /*build=*/true)
        == Code::kArityViolation);
}

TEST_CASE("registry exposes the built-in kinds") {
  const auto core = treedef::NodeRegistry::with_core_kinds();
  for (const char* kind : {"Sequence", "Priority", "MemSequence",
                           "MemPriority", "Parallel", "Inverter", "Repeater"}) {
    CAPTURE(kind);
    CHECK(core.contains(kind));
    CHECK(core.find(kind) != nullptr);
  }
  CHECK_FALSE(core.contains("Teleporter"));
  CHECK(core.find("Teleporter") == nullptr);

  const auto full = full_registry();
  for (const char* kind : {"IsVictim", "IsFire", "SaveVictim", "ChangeRoom",
                           "LearningAction", "LearningComposite"}) {
    CAPTURE(kind);
    CHECK(full.contains(kind));
  }

  treedef::NodeRegistry empty;
  CHECK_THROWS_AS(empty.add("Broken", {bt::NodeCategory::ACTION, nullptr}),
                  std::invalid_argument);
}

TEST_CASE("a registered document builds into a ticking tree") {
  const std::string text =
      "{\"root\": \"a\", \"nodes\": {"
      "\"a\": {\"kind\": \"Parallel\", \"children\": [\"b\", \"c\"],"
      " \"properties\": {\"success_threshold\": 1, \"failure_threshold\": 2}},"
      "\"b\": {\"kind\": \"Repeater\", \"child\": \"d\","
      " \"properties\": {\"count\": 1}},"
      "\"c\": {\"kind\": \"ChangeRoom\"},"
      "\"d\": {\"kind\": \"ChangeRoom\"}}}";
  const auto registry = full_registry();
  bt::BehaviorTree tree =
      treedef::build_tree(treedef::parse_tree_document(text), registry);
  CHECK(tree.node_count() == 4);
  // Depth-first, children in document order: a, b, d, c.
  CHECK(tree.node(1)->kind() == "Parallel");
  CHECK(tree.node(2)->kind() == "Repeater");
  CHECK(tree.node(3)->kind() == "ChangeRoom");
  CHECK(tree.node(4)->kind() == "ChangeRoom");

  sim::SimState world(sim::SimConfig{.scenario = 1, .seed = 4});
  bt::Blackboard blackboard;
  bt::TickContext ctx{blackboard, &world};
  CHECK(tree.tick(ctx) == bt::NodeStatus::SUCCESS);
}

TEST_CASE("loading a missing file reports the path") {
  CHECK_THROWS_WITH_AS(treedef::load_tree_file("/nonexistent/x.bt3.json"),
                       doctest::Contains("/nonexistent/x.bt3.json"),
                       std::runtime_error);
}
