#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclespec/vertex_set.hpp"

namespace cyclespec {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1 (n <= 128) stored as a
// symmetric bit-matrix with zero diagonal.
class Graph {
public:
    Graph() = default;
    // Edgeless graph on `order` vertices; order 0 is the join/union identity.
    explicit Graph(int order);

    // Validating constructor: 1 <= order <= 128, no loops, indices < order.
    // Duplicate pairs collapse.
    static Graph build(int order, std::span<const Edge> edges);
    static Graph build(int order, std::initializer_list<Edge> edges) {
        return build(order, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(rows_.size()); }
    int edge_count() const { return edges_; }

    bool adjacent(int u, int v) const { return rows_[check(u)].contains(check(v)); }
    const VertexSet& neighbors(int v) const { return rows_[check(v)]; }
    int degree(int v) const { return rows_[check(v)].size(); }
    VertexSet vertices() const { return VertexSet::first(order()); }

    // In-place edge edits for building a value; both throw on bad indices or loops.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    int check(int v) const {
        if (v < 0 || v >= order())
            throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(order()));
        return v;
    }
    void check_pair(int u, int v) const;

    std::vector<VertexSet> rows_;
    int edges_ = 0;
};

struct ComponentDecomposition {
    std::vector<VertexSet> blocks;
    int count = 0;
};

// Result of deleting or keeping a vertex subset; original_label[i] is the
// label in the source graph of vertex i of `graph`.
struct Reindexed {
    Graph graph;
    std::vector<int> original_label;
};

Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
// g with vertex labels mapped through perm: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

Reindexed delete_vertex(const Graph& g, int v);
Reindexed induced_subgraph(const Graph& g, const VertexSet& keep);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
ComponentDecomposition components(const Graph& g);
bool is_connected(const Graph& g);
VertexSet cut_vertices(const Graph& g);
bool is_2connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertex sets of the biconnected blocks (bridges included as 2-vertex blocks,
// isolated vertices excluded).
std::vector<VertexSet> biconnected_blocks(const Graph& g);

int clique_number(const Graph& g);
// Lexicographically least maximum clique, as sorted labels.
std::vector<int> maximum_clique(const Graph& g);

// Named small graphs used throughout tests and constructions.
namespace named {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
}  // namespace named

}  // namespace cyclespec
