#pragma once

#include <string>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

// Canonical relabeling: vertex v of g becomes labeling[v]. Isomorphic
// graphs map to identical relabeled graphs.
std::vector<int> canonical_labeling(const Graph& g);

// graph6 text of the canonically relabeled graph. Equal strings exactly
// when the graphs are isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Whether some bijection V(g) -> V(host) maps every edge of g onto an edge
// of host (g is a spanning subgraph of host up to relabeling). Orders must
// match.
bool embeds_spanning(const Graph& g, const Graph& host);

}  // namespace cyclespec
