#include "cyclespec/cycles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace cyclespec {

std::uint64_t default_cycle_budget() {
    if (const char* env = std::getenv("CYCLESPEC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultCycleBudget;
}

namespace {

// Partition into classes of mutually interchangeable vertices: equal closed
// neighborhoods first, then equal open neighborhoods among the rest.
// Swapping two members of a class is an automorphism. Vertices in `fixed`
// stay singletons.
struct TwinClasses {
    std::vector<int> class_of;
    std::vector<VertexSet> members;

    TwinClasses(const Graph& g, const VertexSet& fixed) : class_of(g.order(), -1) {
        const int n = g.order();
        auto group = [&](bool closed) {
            for (int v = 0; v < n; ++v) {
                if (class_of[v] >= 0 || fixed.contains(v)) continue;
                VertexSet key = g.neighbors(v);
                if (closed) key.insert(v);
                VertexSet cls = VertexSet::single(v);
                for (int w = v + 1; w < n; ++w) {
                    if (class_of[w] >= 0 || fixed.contains(w)) continue;
                    VertexSet other = g.neighbors(w);
                    if (closed) other.insert(w);
                    if (other == key) cls.insert(w);
                }
                if (cls.size() < 2 && closed) continue;
                const int id = static_cast<int>(members.size());
                cls.for_each([&](int w) { class_of[w] = id; });
                members.push_back(cls);
            }
        };
        group(true);
        group(false);
        for (int v = 0; v < n; ++v) {
            if (class_of[v] < 0) {
                class_of[v] = static_cast<int>(members.size());
                members.push_back(VertexSet::single(v));
            }
        }
    }
};

struct StateKey {
    std::uint64_t lo, hi;
    int head;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
        h ^= (k.hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
        h ^= static_cast<std::uint64_t>(k.head) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

constexpr std::size_t kMemoCap = 1U << 22;

// Depth-first extension of a path that must close into a cycle of exactly
// `length` vertices at `anchor`.
struct PathSearch {
    const Graph& g;
    const TwinClasses& twins;
    int anchor = 0;
    int length = 0;
    VertexSet allowed;
    VertexSet closers;
    std::uint64_t& nodes;
    std::uint64_t budget;
    bool exhausted = false;
    std::unordered_set<StateKey, StateHash> failed;

    PathSearch(const Graph& graph, const TwinClasses& t, std::uint64_t& node_count, std::uint64_t limit)
        : g(graph), twins(t), nodes(node_count), budget(limit) {}

    // Necessary condition: some closer within `remaining` steps and at least
    // `remaining` vertices reachable from head through unused vertices.
    bool feasible(int head, const VertexSet& avail, int remaining) const {
        VertexSet frontier = g.neighbors(head) & avail;
        VertexSet reach;
        bool closer_seen = false;
        for (int dist = 1; frontier.any(); ++dist) {
            if (!closer_seen) {
                if (dist > remaining) return false;
                closer_seen = frontier.intersects(closers);
            }
            reach |= frontier;
            if (closer_seen && reach.size() >= remaining) return true;
            VertexSet next;
            frontier.for_each([&](int f) { next |= g.neighbors(f); });
            frontier = (next & avail).minus(reach);
        }
        return false;
    }

    bool extend(int head, const VertexSet& visited, int depth) {
        if (depth == length) return g.adjacent(head, anchor);
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        const int remaining = length - depth;
        const VertexSet avail = allowed.minus(visited);
        if (!feasible(head, avail, remaining)) return false;
        const StateKey key{visited.word(0), visited.word(1), head};
        if (failed.contains(key)) return false;

        // Internal path vertices need two usable neighbors.
        if (remaining > 1) {
            VertexSet ends = avail;
            ends.insert(head);
            ends.insert(anchor);
            int usable = 0;
            avail.for_each([&](int w) { usable += (g.neighbors(w) & ends).size() >= 2; });
            if (usable < remaining) return false;
        }

        VertexSet cand = g.neighbors(head) & avail;
        if (remaining == 1) cand &= closers;
        // Fewest onward options first.
        std::array<std::pair<int, int>, kMaxOrder> order;
        int count = 0;
        while (cand.any()) {
            const int w = cand.pop_front();
            if (twins.members[twins.class_of[w]].minus(visited).front() != w) continue;
            order[count++] = {(g.neighbors(w) & avail).size(), w};
        }
        std::sort(order.begin(), order.begin() + count);
        for (int i = 0; i < count; ++i) {
            const int w = order[i].second;
            VertexSet next = visited;
            next.insert(w);
            if (extend(w, next, depth + 1)) return true;
            if (exhausted) return false;
        }
        if (failed.size() < kMemoCap) failed.insert(key);
        return false;
    }
};

int local_girth(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        queue.assign(1, r);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int v = queue[i];
            if (best && 2 * dist[v] >= best) break;
            g.neighbors(v).for_each([&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    const int len = dist[v] + dist[w] + 1;
                    if (!best || len < best) best = len;
                }
            });
        }
    }
    return best;
}

// Subset DP over paths anchored at their least vertex s: heads[T] holds the
// vertices v in T such that some path from s visits exactly {s} + T and ends
// at v. A cycle of length |T| + 1 exists when heads[T] meets N(s). Exact for
// every length at once; memory 2^(b-1) words.
std::vector<char> subset_dp_lengths(const Graph& g) {
    const int b = g.order();
    std::vector<char> present(static_cast<std::size_t>(b) + 1, 0);
    std::vector<std::uint32_t> heads;
    for (int s = 0; b - s >= 3; ++s) {
        const int m = b - 1 - s;  // local bit i is vertex s + 1 + i
        std::vector<std::uint32_t> nb(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const VertexSet row = g.neighbors(s + 1 + i).above(s);
            row.for_each([&](int w) { nb[i] |= std::uint32_t{1} << (w - s - 1); });
        }
        std::uint32_t closers = 0;
        g.neighbors(s).above(s).for_each([&](int w) { closers |= std::uint32_t{1} << (w - s - 1); });
        if (std::popcount(closers) < 2) continue;

        const std::uint32_t full = m == 32 ? ~0U : (std::uint32_t{1} << m) - 1;
        heads.assign(static_cast<std::size_t>(full) + 1, 0);
        for (std::uint32_t t = 1; t != 0 && t <= full; ++t) {
            std::uint32_t h = 0;
            if ((t & (t - 1)) == 0) {
                h = t & closers;
            } else {
                for (std::uint32_t rest = t; rest;) {
                    const std::uint32_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    if (nb[std::countr_zero(bit)] & heads[t ^ bit]) h |= bit;
                }
                if (h & closers) present[std::popcount(t) + 1] = 1;
            }
            heads[t] = h;
        }
    }
    return present;
}

constexpr int kDpDirectMax = 12;          // blocks this small go straight to the DP
constexpr int kDpFallbackMax = 24;        // largest block the DP may handle
constexpr std::uint64_t kDfsBeforeDp = 200'000;

// One biconnected block, reindexed, with the facts every length query needs.
class BlockSearch {
public:
    explicit BlockSearch(Graph local)
        : g_(std::move(local)), twins_(g_, VertexSet{}) {
        const int b = g_.order();
        complete_ = g_.edge_count() == b * (b - 1) / 2;
        bipartite_ = is_bipartite(g_);
        girth_ = complete_ ? 3 : local_girth(g_);
    }

    int size() const { return g_.order(); }
    int girth() const { return girth_; }
    bool complete() const { return complete_; }

    CycleAnswer find(int length, std::uint64_t& nodes, std::uint64_t budget) const {
        const int b = g_.order();
        if (length > b || girth_ == 0 || length < girth_) return CycleAnswer::no;
        if (complete_ || length == girth_) return CycleAnswer::yes;
        if (bipartite_ && length % 2 == 1) return CycleAnswer::no;
        // A block with as many edges as vertices is a single cycle.
        if (g_.edge_count() <= b) return length == b ? CycleAnswer::yes : CycleAnswer::no;
        if (exact_) return (*exact_)[length] ? CycleAnswer::yes : CycleAnswer::no;
        if (b <= kDpDirectMax) return from_dp(length);

        const bool dp_available = b <= kDpFallbackMax;
        const std::uint64_t limit = dp_available ? std::min(budget, nodes + kDfsBeforeDp) : budget;
        const CycleAnswer a = dfs(length, nodes, limit);
        if (a == CycleAnswer::exhausted && dp_available) return from_dp(length);
        return a;
    }

private:
    CycleAnswer from_dp(int length) const {
        if (!exact_) exact_ = subset_dp_lengths(g_);
        return (*exact_)[length] ? CycleAnswer::yes : CycleAnswer::no;
    }

    CycleAnswer dfs(int length, std::uint64_t& nodes, std::uint64_t budget) const {
        const int b = g_.order();
        for (int s = 0; b - s >= length; ++s) {
            if (twins_.members[twins_.class_of[s]].front() != s) continue;
            PathSearch search(g_, twins_, nodes, budget);
            search.anchor = s;
            search.length = length;
            search.allowed = g_.vertices().above(s);
            search.closers = g_.neighbors(s) & search.allowed;
            if (search.closers.size() < 2) continue;
            if (search.extend(s, VertexSet::single(s), 1)) return CycleAnswer::yes;
            if (search.exhausted) return CycleAnswer::exhausted;
        }
        return CycleAnswer::no;
    }

    Graph g_;
    TwinClasses twins_;
    bool complete_ = false;
    bool bipartite_ = false;
    int girth_ = 0;
    mutable std::optional<std::vector<char>> exact_;
};

std::vector<BlockSearch> cyclic_blocks(const Graph& g) {
    std::vector<BlockSearch> out;
    for (const VertexSet& block : biconnected_blocks(g)) {
        if (block.size() >= 3) out.emplace_back(induced_subgraph(g, block).graph);
    }
    return out;
}

// Subset DP over paths that start at v and avoid u: heads[T] holds the ends
// of paths from v through exactly T. Some cycle through uv has `length`
// vertices when a set T of size length - 2 has an end adjacent to u.
bool through_edge_dp(const Graph& g, int u, int v, int length) {
    const int b = g.order();
    std::vector<int> local;
    for (int w = 0; w < b; ++w)
        if (w != u && w != v) local.push_back(w);
    const int m = static_cast<int>(local.size());
    std::vector<std::uint32_t> nb(static_cast<std::size_t>(m));
    std::uint32_t start = 0, closers = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (g.adjacent(local[i], local[j])) nb[i] |= std::uint32_t{1} << j;
        if (g.adjacent(v, local[i])) start |= std::uint32_t{1} << i;
        if (g.adjacent(u, local[i])) closers |= std::uint32_t{1} << i;
    }
    const int want = length - 2;
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<std::uint32_t> heads(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t t = 1; t <= full; ++t) {
        const int size = std::popcount(t);
        if (size > want) continue;
        std::uint32_t h = 0;
        if (size == 1) {
            h = t & start;
        } else {
            for (std::uint32_t rest = t; rest;) {
                const std::uint32_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (nb[std::countr_zero(bit)] & heads[t ^ bit]) h |= bit;
            }
        }
        heads[t] = h;
        if (size == want && (h & closers)) return true;
    }
    return false;
}

constexpr int kThroughDpMax = 24;  // largest block the through-edge DP may handle

void check_length(const Graph& g, int length) {
    if (length < 3 || length > g.order())
        throw GraphError("cycle length " + std::to_string(length) + " outside [3, " +
                         std::to_string(g.order()) + "]");
}

}  // namespace

CycleAnswer has_cycle_of_length(const Graph& g, int length, std::uint64_t budget) {
    check_length(g, length);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    for (const BlockSearch& block : cyclic_blocks(g)) {
        const CycleAnswer a = block.find(length, nodes, budget);
        if (a == CycleAnswer::yes) return a;
        if (a == CycleAnswer::exhausted) exhausted = true;
    }
    return exhausted ? CycleAnswer::exhausted : CycleAnswer::no;
}

CycleAnswer has_cycle_through_edge(const Graph& g, int u, int v, int length, std::uint64_t budget) {
    check_length(g, length);
    if (!g.adjacent(u, v)) throw GraphError("has_cycle_through_edge: uv is not an edge");
    VertexSet block_set;
    for (const VertexSet& block : biconnected_blocks(g)) {
        if (block.contains(u) && block.contains(v)) {
            block_set = block;
            break;
        }
    }
    if (block_set.size() < length) return CycleAnswer::no;
    const Reindexed r = induced_subgraph(g, block_set);
    const Graph& h = r.graph;
    int lu = -1, lv = -1;
    for (int i = 0; i < h.order(); ++i) {
        if (r.original_label[i] == u) lu = i;
        if (r.original_label[i] == v) lv = i;
    }
    if (length == 3) return (h.neighbors(lu) & h.neighbors(lv)).any() ? CycleAnswer::yes : CycleAnswer::no;

    VertexSet fixed = VertexSet::single(lu);
    fixed.insert(lv);
    const TwinClasses twins(h, fixed);
    const bool dp_available = h.order() <= kThroughDpMax;
    std::uint64_t nodes = 0;
    PathSearch search(h, twins, nodes, dp_available ? std::min(budget, kDfsBeforeDp) : budget);
    search.anchor = lu;
    search.length = length;
    search.allowed = h.vertices();
    search.closers = h.neighbors(lu);
    search.closers.erase(lv);
    if (search.extend(lv, fixed, 2)) return CycleAnswer::yes;
    if (!search.exhausted) return CycleAnswer::no;
    if (dp_available) return through_edge_dp(h, lu, lv, length) ? CycleAnswer::yes : CycleAnswer::no;
    return CycleAnswer::exhausted;
}

bool CycleSpectrum::contains(int length) const {
    return std::binary_search(lengths.begin(), lengths.end(), length);
}

bool CycleSpectrum::contains_range(int lo, int hi) const {
    for (int l = lo; l <= hi; ++l)
        if (!contains(l)) return false;
    return true;
}

CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t nodes = 0;
    for (const BlockSearch& block : cyclic_blocks(g)) {
        for (int l = std::max(3, block.girth()); l <= block.size(); ++l) {
            if (present[l]) continue;
            const CycleAnswer a = block.find(l, nodes, budget);
            if (a == CycleAnswer::exhausted)
                throw CycleBudgetExhausted("cycle search budget exhausted at length " + std::to_string(l));
            if (a == CycleAnswer::yes) present[l] = 1;
        }
    }
    CycleSpectrum s;
    for (int l = 3; l <= n; ++l) {
        if (!present[l]) continue;
        s.lengths.push_back(l);
        (l % 2 == 0 ? s.longest_even : s.longest_odd) = l;
    }
    if (!s.lengths.empty()) {
        s.girth = s.lengths.front();
        s.circumference = s.lengths.back();
    }
    return s;
}

int girth(const Graph& g) { return local_girth(g); }

int circumference(const Graph& g, std::uint64_t budget) {
    int best = 0;
    std::uint64_t nodes = 0;
    for (const BlockSearch& block : cyclic_blocks(g)) {
        for (int l = block.size(); l > best && l >= block.girth(); --l) {
            const CycleAnswer a = block.find(l, nodes, budget);
            if (a == CycleAnswer::exhausted)
                throw CycleBudgetExhausted("cycle search budget exhausted at length " + std::to_string(l));
            if (a == CycleAnswer::yes) {
                best = l;
                break;
            }
        }
    }
    return best;
}

int longest_even_cycle(const Graph& g, std::uint64_t budget) {
    return cycle_spectrum(g, budget).longest_even;
}

int longest_odd_cycle(const Graph& g, std::uint64_t budget) {
    return cycle_spectrum(g, budget).longest_odd;
}

bool is_weakly_pancyclic(const CycleSpectrum& s) {
    if (s.acyclic()) throw GraphError("weak pancyclicity is undefined for acyclic graphs");
    return static_cast<int>(s.lengths.size()) == s.circumference - s.girth + 1;
}

bool is_weakly_pancyclic(const Graph& g, std::uint64_t budget) {
    return is_weakly_pancyclic(cycle_spectrum(g, budget));
}

bool is_hamiltonian(const Graph& g, std::uint64_t budget) {
    if (g.order() < 3) throw GraphError("hamiltonicity needs at least 3 vertices");
    const CycleAnswer a = has_cycle_of_length(g, g.order(), budget);
    if (a == CycleAnswer::exhausted) throw CycleBudgetExhausted("cycle search budget exhausted");
    return a == CycleAnswer::yes;
}

ThetaStructure theta_structure(const Graph& g) {
    ThetaStructure t;
    for (const VertexSet& block : biconnected_blocks(g)) {
        int twice_edges = 0;
        block.for_each([&](int v) { twice_edges += (g.neighbors(v) & block).size(); });
        if (twice_edges / 2 > block.size() && block.size() >= 3) {
            t.has_theta = true;
            return t;
        }
    }
    for (const VertexSet& comp : components(g).blocks) {
        int twice_edges = 0;
        bool two_regular = true;
        comp.for_each([&](int v) {
            twice_edges += g.degree(v);
            two_regular = two_regular && g.degree(v) == 2;
        });
        ComponentKind kind = ComponentKind::other;
        if (comp.size() == 1) kind = ComponentKind::vertex;
        else if (comp.size() == 2) kind = ComponentKind::edge;
        else if (two_regular) kind = ComponentKind::cycle;
        t.components.push_back(comp);
        t.kinds.push_back(kind);
    }
    return t;
}

const char* to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::vertex: return "vertex";
        case ComponentKind::edge: return "edge";
        case ComponentKind::cycle: return "cycle";
        case ComponentKind::other: return "other";
    }
    return "other";
}

}  // namespace cyclespec
