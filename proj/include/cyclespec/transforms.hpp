#pragma once

#include <span>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

struct ClosureResult {
    Graph graph;
    std::vector<Edge> added;  // insertion order
    int threshold = 0;
};

// Repeatedly joins non-adjacent pairs whose degree sum is at least
// `threshold`, rescanning pairs lexicographically after every insertion.
ClosureResult closure(const Graph& g, int threshold);

// Same fixed point, scanning candidate pairs in the given order (a
// permutation of all n(n-1)/2 pairs, each with u < v) after each insertion.
ClosureResult closure_in_order(const Graph& g, int threshold, std::span<const Edge> pair_order);

// Kelmans operation G[u -> v]: every edge uw with w outside N(v) + v moves
// to vw. The edge uv, if present, stays; u stays in place even if isolated.
Graph kelmans(const Graph& g, int u, int v);

}  // namespace cyclespec
