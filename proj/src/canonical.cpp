#include "cyclespec/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "cyclespec/graph6.hpp"

namespace cyclespec {

namespace {

using Cells = std::vector<std::vector<int>>;

// Closed-neighborhood twins get the same id, then open-neighborhood twins.
std::vector<int> twin_ids(const Graph& g) {
    const int n = g.order();
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int pass = 0; pass < 2; ++pass) {
        for (int v = 0; v < n; ++v) {
            if (id[v] >= 0) continue;
            VertexSet key = g.neighbors(v);
            if (pass == 0) key.insert(v);
            bool grouped = false;
            for (int w = v + 1; w < n; ++w) {
                if (id[w] >= 0) continue;
                VertexSet other = g.neighbors(w);
                if (pass == 0) other.insert(w);
                if (other == key) {
                    id[w] = next;
                    grouped = true;
                }
            }
            if (grouped || pass == 1) id[v] = next++;
        }
    }
    return id;
}

// Refines an ordered partition to the coarsest equitable refinement.
// Splits order sub-cells by neighbor count, so the result depends only on
// the input partition and the graph, never on vertex labels.
void refine(const Graph& g, Cells& cells) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            VertexSet splitter;
            for (int v : cells[s]) splitter.insert(v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cells[c].size());
                for (int v : cells[c]) keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;
                Cells parts;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
                    parts.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                changed = true;
                break;
            }
        }
    }
}

struct CanonSearch {
    const Graph& g;
    std::vector<int> twin;
    std::vector<std::uint64_t> best_cert;
    std::vector<int> best_order;

    explicit CanonSearch(const Graph& graph) : g(graph), twin(twin_ids(graph)) {}

    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const {
        const std::size_t n = order.size();
        std::vector<std::uint64_t> cert((n * n + 63) / 64, 0);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++bit)
                if (g.adjacent(order[i], order[j])) cert[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        return cert;
    }

    void search(Cells cells) {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<int> order;
            for (const auto& c : cells) order.push_back(c.front());
            auto cert = certificate(order);
            if (best_order.empty() || cert > best_cert) {
                best_cert = std::move(cert);
                best_order = std::move(order);
            }
            return;
        }
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        std::vector<int> tried;
        for (int v : cells[t]) {
            if (std::find(tried.begin(), tried.end(), twin[v]) != tried.end()) continue;
            tried.push_back(twin[v]);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cells[t])
                if (w != v) rest.push_back(w);
            next[t] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(t) + 1, rest);
            search(std::move(next));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    std::vector<int> labeling(static_cast<std::size_t>(n));
    if (n == 0) return labeling;
    CanonSearch cs(g);
    Cells start(1);
    start[0].resize(static_cast<std::size_t>(n));
    std::iota(start[0].begin(), start[0].end(), 0);
    cs.search(std::move(start));
    for (int i = 0; i < n; ++i) labeling[cs.best_order[i]] = i;
    return labeling;
}

std::string canonical_form(const Graph& g) {
    const std::vector<int> labeling = canonical_labeling(g);
    return to_graph6(relabel(g, labeling));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

struct Embedder {
    const Graph& g;
    const Graph& host;
    std::vector<int> order;      // g's vertices in mapping order
    std::vector<int> image;      // g vertex -> host vertex or -1
    std::vector<int> host_twin;  // twin-class id in host
    VertexSet used;

    bool place(std::size_t i) {
        if (i == order.size()) return true;
        const int x = order[i];
        std::vector<int> tried;
        for (int y = 0; y < host.order(); ++y) {
            if (used.contains(y) || host.degree(y) < g.degree(x)) continue;
            if (std::find(tried.begin(), tried.end(), host_twin[y]) != tried.end()) continue;
            bool ok = true;
            g.neighbors(x).for_each([&](int w) {
                if (ok && image[w] >= 0 && !host.adjacent(y, image[w])) ok = false;
            });
            if (!ok) continue;
            tried.push_back(host_twin[y]);
            image[x] = y;
            used.insert(y);
            if (place(i + 1)) return true;
            used.erase(y);
            image[x] = -1;
        }
        return false;
    }
};

}  // namespace

bool embeds_spanning(const Graph& g, const Graph& host) {
    if (g.order() != host.order()) throw GraphError("embeds_spanning: orders differ");
    if (g.edge_count() > host.edge_count()) return false;
    const int n = g.order();
    Embedder e{g, host, {}, std::vector<int>(static_cast<std::size_t>(n), -1), twin_ids(host), {}};
    // Greedy connectivity order: next vertex has most already-ordered neighbors.
    VertexSet placed;
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed.contains(v)) continue;
            const int links = (g.neighbors(v) & placed).size();
            if (links > best_links || (links == best_links && g.degree(v) > best_deg)) {
                pick = v;
                best_links = links;
                best_deg = g.degree(v);
            }
        }
        placed.insert(pick);
        e.order.push_back(pick);
    }
    return e.place(0);
}

}  // namespace cyclespec
