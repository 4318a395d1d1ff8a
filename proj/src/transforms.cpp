#include "cyclespec/transforms.hpp"

namespace cyclespec {

namespace {

std::vector<Edge> lexicographic_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

}  // namespace

ClosureResult closure_in_order(const Graph& g, int threshold, std::span<const Edge> pair_order) {
    if (threshold < 1) throw GraphError("closure threshold must be at least 1");
    const int n = g.order();
    if (pair_order.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
        throw GraphError("pair order must list every vertex pair once");
    std::vector<char> seen(pair_order.size(), 0);
    for (const Edge& e : pair_order) {
        if (e.u < 0 || e.u >= e.v || e.v >= n) throw GraphError("pair order entries need u < v < n");
        const std::size_t index = static_cast<std::size_t>(e.u) * n + e.v - (e.u + 1) * (e.u + 2) / 2;
        if (seen[index]++) throw GraphError("pair order repeats a pair");
    }
    ClosureResult r{g, {}, threshold};
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : pair_order) {
            if (r.graph.adjacent(e.u, e.v)) continue;
            if (r.graph.degree(e.u) + r.graph.degree(e.v) >= threshold) {
                r.graph.add_edge(e.u, e.v);
                r.added.push_back(e);
                changed = true;
                break;
            }
        }
    }
    return r;
}

ClosureResult closure(const Graph& g, int threshold) {
    const std::vector<Edge> pairs = lexicographic_pairs(g.order());
    return closure_in_order(g, threshold, pairs);
}

Graph kelmans(const Graph& g, int u, int v) {
    if (u == v) throw GraphError("kelmans needs two distinct vertices");
    VertexSet keep = g.neighbors(v);
    keep.insert(v);
    const VertexSet moved = g.neighbors(u).minus(keep);
    Graph h = g;
    moved.for_each([&](int w) {
        h.remove_edge(u, w);
        h.add_edge(v, w);
    });
    return h;
}

}  // namespace cyclespec
