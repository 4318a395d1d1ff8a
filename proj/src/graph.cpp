#include "cyclespec/graph.hpp"

#include <algorithm>
#include <functional>

namespace cyclespec {

Graph::Graph(int order) {
    if (order < 0 || order > kMaxOrder)
        throw GraphError("order " + std::to_string(order) + " outside [0, 128]");
    rows_.resize(static_cast<std::size_t>(order));
}

Graph Graph::build(int order, std::span<const Edge> edges) {
    if (order < 1 || order > kMaxOrder)
        throw GraphError("order " + std::to_string(order) + " outside [1, 128]");
    Graph g(order);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    check(u);
    check(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (rows_[u].contains(v)) return;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!rows_[u].contains(v)) return;
    rows_[u].erase(v);
    rows_[v].erase(u);
    --edges_;
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    if (rows_[u].contains(v)) remove_edge(u, v);
    else add_edge(u, v);
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < order(); ++u)
        rows_[u].above(u).for_each([&](int v) { out.push_back({u, v}); });
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n = n1 + g2.order();
    if (n > kMaxOrder) throw GraphError("join exceeds order 128");
    Graph g(n);
    for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges()) g.add_edge(n1 + e.u, n1 + e.v);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n = n1 + g2.order();
    if (n > kMaxOrder) throw GraphError("union exceeds order 128");
    Graph g(n);
    for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges()) g.add_edge(n1 + e.u, n1 + e.v);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw GraphError("not a permutation");
        seen[p] = 1;
    }
    Graph h(n);
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

Reindexed induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!keep.subset_of(g.vertices())) throw GraphError("induced_subgraph: vertex out of range");
    Reindexed r{Graph(keep.size()), {}};
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    keep.for_each([&](int v) {
        local[v] = static_cast<int>(r.original_label.size());
        r.original_label.push_back(v);
    });
    for (int i = 0; i < static_cast<int>(r.original_label.size()); ++i) {
        const int u = r.original_label[i];
        (g.neighbors(u) & keep).above(u).for_each([&](int v) { r.graph.add_edge(i, local[v]); });
    }
    return r;
}

Reindexed delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError("delete_vertex: vertex out of range");
    VertexSet keep = g.vertices();
    keep.erase(v);
    return induced_subgraph(g, keep);
}

int min_degree(const Graph& g) {
    int best = g.order() == 0 ? 0 : g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

ComponentDecomposition components(const Graph& g) {
    ComponentDecomposition out;
    VertexSet unseen = g.vertices();
    while (unseen.any()) {
        VertexSet comp = VertexSet::single(unseen.front());
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            frontier = next.minus(comp);
            comp |= frontier;
        }
        unseen = unseen.minus(comp);
        out.blocks.push_back(comp);
    }
    out.count = static_cast<int>(out.blocks.size());
    return out;
}

bool is_connected(const Graph& g) { return components(g).count <= 1; }

namespace {

// Hopcroft-Tarjan lowpoint DFS shared by cut-vertex and block extraction.
struct Lowpoint {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<int> stack;
    VertexSet cuts;
    std::vector<VertexSet> blocks;
    int time = 0;

    explicit Lowpoint(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {
        for (int r = 0; r < g.order(); ++r) {
            if (disc[r] >= 0) continue;
            int children = 0;
            disc[r] = low[r] = time++;
            stack.push_back(r);
            g.neighbors(r).for_each([&](int w) {
                if (disc[w] >= 0) return;
                ++children;
                visit(w, r);
                pop_block(w, r);
            });
            stack.pop_back();
            if (children >= 2) cuts.insert(r);
        }
    }

    void visit(int v, int parent) {
        disc[v] = low[v] = time++;
        stack.push_back(v);
        g.neighbors(v).for_each([&](int w) {
            if (w == parent) return;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                return;
            }
            visit(w, v);
            low[v] = std::min(low[v], low[w]);
            if (low[w] >= disc[v]) {
                cuts.insert(v);
                pop_block(w, v);
            }
        });
    }

    // Pops the subtree stack down to and including `child`; together with
    // `attach` it spans one block.
    void pop_block(int child, int attach) {
        VertexSet block = VertexSet::single(attach);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            block.insert(x);
            if (x == child) break;
        }
        blocks.push_back(block);
    }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) { return Lowpoint(g).cuts; }

std::vector<VertexSet> biconnected_blocks(const Graph& g) { return Lowpoint(g).blocks; }

bool is_2connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int r = 0; r < g.order(); ++r) {
        if (side[r] >= 0) continue;
        side[r] = 0;
        std::vector<int> queue{r};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int v = queue[i];
            bool ok = true;
            g.neighbors(v).for_each([&](int w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

namespace {

// Greedy sequential coloring of `cand`; the color count bounds the clique
// number of the induced subgraph.
int color_bound(const Graph& g, VertexSet cand) {
    int colors = 0;
    while (cand.any()) {
        ++colors;
        VertexSet avail = cand;
        while (avail.any()) {
            const int v = avail.pop_front();
            cand.erase(v);
            avail = avail.minus(g.neighbors(v));
        }
    }
    return colors;
}

void expand_clique(const Graph& g, std::vector<int>& current, VertexSet cand,
                   std::vector<int>& best) {
    if (current.size() > best.size()) best = current;
    if (cand.empty()) return;
    if (static_cast<int>(current.size()) + color_bound(g, cand) <= static_cast<int>(best.size()))
        return;
    while (cand.any()) {
        if (static_cast<int>(current.size()) + cand.size() <= static_cast<int>(best.size())) return;
        const int v = cand.pop_front();
        current.push_back(v);
        expand_clique(g, current, cand & g.neighbors(v), best);
        current.pop_back();
    }
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
    std::vector<int> best, current;
    expand_clique(g, current, g.vertices(), best);
    return best;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

namespace named {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) { return join(Graph(1), Graph(leaves)); }

Graph complete_bipartite(int a, int b) { return join(Graph(a), Graph(b)); }

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace named

}  // namespace cyclespec
