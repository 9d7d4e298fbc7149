#include "amrseq/graph.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace amr {

std::vector<int> AmrGraph::out_edges(int node) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].src == node) out.push_back(i);
  }
  return out;
}

int AmrGraph::find_var(const std::string& var) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].var == var) return i;
  }
  return -1;
}

std::optional<std::string> AmrGraph::validate() const {
  if (nodes.empty()) return "graph has no nodes";
  if (root < 0 || root >= static_cast<int>(nodes.size())) {
    return "root index out of range";
  }
  std::set<std::string> vars;
  for (const auto& n : nodes) {
    if (n.var.empty()) return "node with empty variable id";
    if (!vars.insert(n.var).second) return "duplicate variable id " + n.var;
    if (n.label.empty()) return "node " + n.var + " has empty concept";
    for (char c : n.label) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') {
        return "concept label contains whitespace or parentheses: " + n.label;
      }
    }
  }
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= static_cast<int>(nodes.size())) {
      return "edge source out of range";
    }
    if (e.target.is_node() &&
        e.target.node >= static_cast<int>(nodes.size())) {
      return "edge target out of range";
    }
    if (e.relation.empty() || e.relation[0] != ':') {
      return "relation label must start with ':': " + e.relation;
    }
  }
  // Reachability from the root.
  std::vector<bool> seen(nodes.size(), false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (int ei : out_edges(n)) {
      const Edge& e = edges[ei];
      if (e.target.is_node() && !seen[e.target.node]) {
        seen[e.target.node] = true;
        stack.push_back(e.target.node);
      }
    }
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!seen[i]) return "node " + nodes[i].var + " unreachable from root";
  }
  return std::nullopt;
}

std::vector<Triple> graph_triples(const AmrGraph& g) {
  std::vector<Triple> ts;
  ts.reserve(g.nodes.size() + g.edges.size() + 1);
  for (const auto& n : g.nodes) {
    ts.push_back({TripleKind::Instance, "", n.var, n.label});
  }
  ts.push_back({TripleKind::Attribute, "TOP", g.nodes[g.root].var,
                g.nodes[g.root].label});
  for (const auto& e : g.edges) {
    if (e.target.is_node()) {
      ts.push_back({TripleKind::Relation, e.relation, g.nodes[e.src].var,
                    g.nodes[e.target.node].var});
    } else {
      ts.push_back({TripleKind::Attribute, e.relation, g.nodes[e.src].var,
                    e.target.constant.value});
    }
  }
  return ts;
}

bool is_number_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  bool digit = false, dot = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '.' && !dot) {
      dot = true;
    } else {
      return false;
    }
  }
  return digit;
}

bool special_constant(const std::string& value) {
  return value == "-" || value == "interrogative" ||
         value == "expressive" || value == "imperative" ||
         is_number_token(value);
}

}  // namespace amr
