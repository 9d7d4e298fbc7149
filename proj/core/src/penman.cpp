#include "amrseq/penman.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "amrseq/errors.hpp"

namespace amr {

namespace {

struct Tok {
  enum Kind { LParen, RParen, Slash, Text, Quoted } kind;
  std::string text;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      toks.push_back({Tok::LParen, "("});
      ++i;
    } else if (c == ')') {
      toks.push_back({Tok::RParen, ")"});
      ++i;
    } else if (c == '/') {
      toks.push_back({Tok::Slash, "/"});
      ++i;
    } else if (c == '"') {
      size_t j = s.find('"', i + 1);
      if (j == std::string::npos) {
        throw ParseError(ParseErrc::UnbalancedInput, "unterminated quote");
      }
      toks.push_back({Tok::Quoted, s.substr(i, j - i + 1)});
      i = j + 1;
    } else {
      size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
             s[j] != '(' && s[j] != ')' && s[j] != '/') {
        ++j;
      }
      toks.push_back({Tok::Text, s.substr(i, j - i)});
      i = j;
    }
  }
  return toks;
}

// Bare-token placeholder resolved after the whole expression is read: it is
// either a reentrant variable reference or a constant.
struct PendingRef {
  int edge;  // index into g.edges
  std::string token;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  AmrGraph run() {
    if (toks_.empty()) {
      throw ParseError(ParseErrc::UnbalancedInput, "empty input");
    }
    AmrGraph g;
    g.root = parse_node(g);
    if (pos_ != toks_.size()) {
      throw ParseError(ParseErrc::UnbalancedInput,
                       "trailing tokens after top-level expression");
    }
    resolve(g);
    return g;
  }

 private:
  const Tok& peek() const {
    if (pos_ >= toks_.size()) {
      throw ParseError(ParseErrc::UnbalancedInput, "unexpected end of input");
    }
    return toks_[pos_];
  }
  Tok next() {
    Tok t = peek();
    ++pos_;
    return t;
  }

  int parse_node(AmrGraph& g) {
    if (next().kind != Tok::LParen) {
      throw ParseError(ParseErrc::UnbalancedInput, "expected '('");
    }
    Tok var = next();
    if (var.kind != Tok::Text) {
      throw ParseError(ParseErrc::UnbalancedInput, "expected variable name");
    }
    if (g.find_var(var.text) >= 0) {
      throw ParseError(ParseErrc::DuplicateVariable,
                       "variable defined twice: " + var.text);
    }
    if (next().kind != Tok::Slash) {
      throw ParseError(ParseErrc::UnbalancedInput,
                       "expected '/' after variable " + var.text);
    }
    Tok concept_tok = next();
    if (concept_tok.kind != Tok::Text) {
      throw ParseError(ParseErrc::UnbalancedInput,
                       "expected concept after '/'");
    }
    int node = static_cast<int>(g.nodes.size());
    g.nodes.push_back({var.text, concept_tok.text});

    while (true) {
      const Tok& t = peek();
      if (t.kind == Tok::RParen) {
        ++pos_;
        return node;
      }
      if (t.kind != Tok::Text || t.text.empty() || t.text[0] != ':') {
        throw ParseError(ParseErrc::UnbalancedInput,
                         "expected relation or ')' but got '" + t.text + "'");
      }
      std::string rel = next().text;
      const Tok& v = peek();
      if (v.kind == Tok::LParen) {
        int child = parse_node(g);
        g.edges.push_back({node, rel, Target{child, {}}});
      } else if (v.kind == Tok::Quoted) {
        g.edges.push_back({node, rel, Target{-1, Constant{v.text}}});
        ++pos_;
      } else if (v.kind == Tok::Text) {
        // Bare token: reentrancy or constant; resolved at the end.
        g.edges.push_back({node, rel, Target{-1, Constant{v.text}}});
        pending_.push_back({static_cast<int>(g.edges.size()) - 1, v.text});
        ++pos_;
      } else {
        throw ParseError(ParseErrc::UnbalancedInput,
                         "relation " + rel + " has no value");
      }
    }
  }

  void resolve(AmrGraph& g) {
    for (const auto& p : pending_) {
      int node = g.find_var(p.token);
      if (node >= 0) {
        g.edges[p.edge].target = Target{node, {}};
      } else if (special_constant(p.token)) {
        // Already stored as a constant.
      } else {
        throw ParseError(ParseErrc::DanglingReference,
                         "bare token is neither a defined variable nor a "
                         "constant: " +
                             p.token);
      }
    }
  }

  std::vector<Tok> toks_;
  size_t pos_ = 0;
  std::vector<PendingRef> pending_;
};

class Emitter {
 public:
  Emitter(const AmrGraph& g, bool multiline,
          const std::vector<std::string>* rename)
      : g_(g), multiline_(multiline), rename_(rename) {}

  std::string run() {
    visited_.assign(g_.nodes.size(), false);
    emit_node(g_.root, 0);
    return out_.str();
  }

 private:
  const std::string& var_of(int node) const {
    return rename_ ? (*rename_)[node] : g_.nodes[node].var;
  }

  void emit_node(int node, int depth) {
    visited_[node] = true;
    out_ << '(' << var_of(node) << " / " << g_.nodes[node].label;
    for (int ei : g_.out_edges(node)) {
      const Edge& e = g_.edges[ei];
      if (multiline_) {
        out_ << '\n' << std::string(4 * (depth + 1), ' ');
      } else {
        out_ << ' ';
      }
      out_ << e.relation << ' ';
      if (!e.target.is_node()) {
        out_ << e.target.constant.value;
      } else if (visited_[e.target.node]) {
        out_ << var_of(e.target.node);
      } else {
        emit_node(e.target.node, depth + 1);
      }
    }
    out_ << ')';
  }

  const AmrGraph& g_;
  bool multiline_;
  const std::vector<std::string>* rename_;
  std::vector<bool> visited_;
  std::ostringstream out_;
};

// First-visit traversal order of nodes, following stored edge order.
void visit_order(const AmrGraph& g, int node, std::vector<bool>& seen,
                 std::vector<int>& order) {
  seen[node] = true;
  order.push_back(node);
  for (int ei : g.out_edges(node)) {
    const Edge& e = g.edges[ei];
    if (e.target.is_node() && !seen[e.target.node]) {
      visit_order(g, e.target.node, seen, order);
    }
  }
}

}  // namespace

AmrGraph parse_penman(const std::string& text) {
  return Parser(text).run();
}

std::string emit_penman(const AmrGraph& g, const EmitOptions& opts) {
  return Emitter(g, opts.multiline, nullptr).run();
}

std::string canonical_form(const AmrGraph& g) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<int> order;
  visit_order(g, g.root, seen, order);
  std::vector<std::string> rename(g.nodes.size());
  for (size_t i = 0; i < order.size(); ++i) {
    rename[order[i]] = "v" + std::to_string(i);
  }
  return Emitter(g, false, &rename).run();
}

}  // namespace amr
