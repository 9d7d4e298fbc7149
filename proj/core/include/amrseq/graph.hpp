#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amr {

// A variable node of an AMR graph. `var` is the Penman variable name, kept
// verbatim on read but carrying no meaning; `label` is the concept.
struct Node {
  std::string var;
  std::string label;
};

// A constant leaf: quoted literal (quotes included), number, "-",
// "interrogative", "expressive" or "imperative".
struct Constant {
  std::string value;

  bool operator==(const Constant& o) const { return value == o.value; }
};

// Edge target: either a node (by index) or a constant.
struct Target {
  int node = -1;  // index into AmrGraph::nodes, or -1 for a constant
  Constant constant;

  bool is_node() const { return node >= 0; }
};

struct Edge {
  int src = 0;          // index into AmrGraph::nodes
  std::string relation; // with leading ':', e.g. ":ARG0", ":name"
  Target target;
};

// Rooted directed labeled graph. Edge order is preserved exactly as read;
// linearization depends on it. Immutable by convention after construction.
struct AmrGraph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int root = 0;

  // Outgoing edge indices of a node, in stored order.
  std::vector<int> out_edges(int node) const;

  int find_var(const std::string& var) const;  // -1 if absent

  // Checks the type invariants: one root, all nodes reachable, unique ids,
  // nonempty labels. Returns an explanation for the first violation.
  std::optional<std::string> validate() const;
};

enum class TripleKind { Instance, Attribute, Relation };

// Smatch substrate. Instance: (var, concept). Attribute: (relation, var,
// constant), including the synthetic TOP. Relation: (relation, var, var).
struct Triple {
  TripleKind kind;
  std::string relation;  // empty for Instance
  std::string first;     // variable
  std::string second;    // concept, constant value, or variable

  bool operator==(const Triple& o) const = default;
};

// Deterministic triple decomposition: one instance per variable node, one
// attribute per constant edge plus TOP for the root, one relation triple per
// variable-to-variable edge.
std::vector<Triple> graph_triples(const AmrGraph& g);

// True if `value` is exempt from -CONST- categorization: a number, "-",
// or one of the mode constants.
bool special_constant(const std::string& value);

bool is_number_token(const std::string& s);

}  // namespace amr
