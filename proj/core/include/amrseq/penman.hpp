#pragma once

#include <string>

#include "amrseq/graph.hpp"

namespace amr {

// Reads one Penman expression, possibly spanning multiple lines. A bare
// variable reference attaches an edge to the already-defined node; a bare
// token that is neither a defined variable nor a recognized constant raises
// DanglingReference.
AmrGraph parse_penman(const std::string& text);

struct EmitOptions {
  bool multiline = true;  // one relation per line, indented by depth
};

// Writes Penman text. Reentrancies appear as bare variable references at
// their later occurrences. parse_penman(emit_penman(g)) is isomorphic to g.
std::string emit_penman(const AmrGraph& g, const EmitOptions& opts = {});

// Single-line emission with variables renamed v0, v1, ... in first-visit
// traversal order. Equal strings <=> isomorphic graphs with identical edge
// order, which makes this the cheap order-aware equality used in tests.
std::string canonical_form(const AmrGraph& g);

}  // namespace amr
