#include "cyclespec/families.hpp"

#include <array>
#include <charconv>

#include "cyclespec/canonical.hpp"

namespace cyclespec {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

void add_clique(Graph& g, int first, int count) {
    for (int u = first; u < first + count; ++u)
        for (int v = u + 1; v < first + count; ++v) g.add_edge(u, v);
}

}  // namespace

std::int64_t binomial2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

Graph family_l(int n, int k) {
    require(k >= 0 && n >= k + 2 && n <= kMaxOrder, "L(n,k) needs k >= 0 and k + 2 <= n <= 128");
    return join(named::complete(1), disjoint_union(named::complete(n - k - 1), named::complete(k)));
}

Graph gamma_t(int n, int t) {
    require(t >= 1 && n >= t + 3 && n <= kMaxOrder, "GammaT(n,t) needs t >= 1 and t + 3 <= n <= 128");
    return join(named::complete(2), disjoint_union(named::complete(n - t - 2), Graph(t)));
}

Graph woodall_gamma(int n, int k) {
    require(k >= 0 && n >= 2 * k + 3 && n <= kMaxOrder, "WG(n,k) needs k >= 0 and 2k + 3 <= n <= 128");
    Graph g(n);
    const int big = n - k - 1;
    add_clique(g, 0, big);
    // second clique: shared vertex 0 plus the last k + 1 vertices
    for (int u = big; u < n; ++u) {
        g.add_edge(0, u);
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph s_nk(int n, int k) {
    require(k >= 1 && n > k && n <= kMaxOrder, "S(n,k) needs 1 <= k < n <= 128");
    return join(named::complete(k), Graph(n - k));
}

Graph s_nk_plus(int n, int k) {
    require(k >= 1 && n - k >= 2 && n <= kMaxOrder, "S+(n,k) needs k >= 1 and n - k >= 2");
    Graph g = s_nk(n, k);
    g.add_edge(k, k + 1);
    return g;
}

Graph turan2(int n) {
    require(n >= 2 && n <= kMaxOrder, "T2(n) needs 2 <= n <= 128");
    return named::complete_bipartite((n + 1) / 2, n / 2);
}

std::int64_t family_l_edges(int n, int k) { return binomial2(n - k - 1) + binomial2(k) + (n - 1); }

std::int64_t gamma_t_edges(int n, int t) { return 1 + binomial2(n - t - 2) + 2 * static_cast<std::int64_t>(n - 2); }

std::int64_t woodall_gamma_edges(int n, int k) { return binomial2(n - k - 1) + binomial2(k + 2); }

Thresholds thresholds(int n, int k) {
    require(k >= 0 && n >= k + 3, "thresholds need k >= 0 and n >= k + 3");
    Thresholds t;
    t.refined = Rational(binomial2(n - k - 1) + binomial2(k + 2));
    t.woodall = t.refined + 1;
    t.stability = Rational(binomial2(n - k - 2) + binomial2(k + 3));
    t.even_cycle = Rational(static_cast<std::int64_t>(2 * k + 1) * (n - 1), 2);
    t.hamiltonian = Rational(binomial2(n - 1) + 1);
    return t;
}

Graph FamilySpec::build() const {
    switch (kind) {
        case FamilyKind::L: return family_l(n, param);
        case FamilyKind::GammaT: return gamma_t(n, param);
        case FamilyKind::WoodallGamma: return woodall_gamma(n, param);
        case FamilyKind::Snk: return s_nk(n, param);
        case FamilyKind::SnkPlus: return s_nk_plus(n, param);
        case FamilyKind::Turan2: return turan2(n);
    }
    throw GraphError("unknown family");
}

std::string FamilySpec::to_string() const {
    const std::string ns = std::to_string(n), ps = "," + std::to_string(param);
    switch (kind) {
        case FamilyKind::L: return "L:" + ns + ps;
        case FamilyKind::GammaT: return "GammaT:" + ns + ps;
        case FamilyKind::WoodallGamma: return "WG:" + ns + ps;
        case FamilyKind::Snk: return "S:" + ns + ps;
        case FamilyKind::SnkPlus: return "S+:" + ns + ps;
        case FamilyKind::Turan2: return "T2:" + ns;
    }
    return "?";
}

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw GraphError("family spec needs NAME:params");
    const std::string_view name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    std::vector<int> params;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view tok = rest.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw GraphError("bad family parameter '" + std::string(tok) + "'");
        params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) throw GraphError("trailing comma in family spec");
    }

    FamilySpec spec;
    if (name == "L") spec.kind = FamilyKind::L;
    else if (name == "GammaT") spec.kind = FamilyKind::GammaT;
    else if (name == "WG") spec.kind = FamilyKind::WoodallGamma;
    else if (name == "S") spec.kind = FamilyKind::Snk;
    else if (name == "S+") spec.kind = FamilyKind::SnkPlus;
    else if (name == "T2") spec.kind = FamilyKind::Turan2;
    else throw GraphError("unknown family '" + std::string(name) + "'");

    const std::size_t want = spec.kind == FamilyKind::Turan2 ? 1 : 2;
    if (params.size() != want) throw GraphError("family " + std::string(name) + " takes " + std::to_string(want) + " parameter(s)");
    spec.n = params[0];
    if (want == 2) spec.param = params[1];
    return spec;
}

namespace {

// For each achievable |T| <= k, one T realizing it. Sets combined by sumset
// come from disjoint parts of the graph, so their unions stay disjoint.
struct SizeWitnesses {
    std::array<std::optional<VertexSet>, kMaxFamilyK + 1> at;

    void offer(int size, const VertexSet& t, int k) {
        if (size <= k && !at[size]) at[size] = t;
    }
};

SizeWitnesses sumset(const SizeWitnesses& a, const SizeWitnesses& b, int k) {
    SizeWitnesses out;
    for (int x = 0; x <= k; ++x) {
        if (!a.at[x]) continue;
        for (int y = 0; x + y <= k; ++y)
            if (b.at[y]) out.offer(x + y, *a.at[x] | *b.at[y], k);
    }
    return out;
}

// S = V - T meets each connected component in nothing, one vertex, or a
// union of blocks forming a subtree of the block-cut tree: two S vertices
// joined through T would close a path leaving S, and a block with two S
// vertices has each of its vertices on a path between them.
class BlockTree {
public:
    BlockTree(const Graph& g, int k) : k_(k), blocks_(biconnected_blocks(g)), blocks_of_(g.order()) {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            blocks_[b].for_each([&](int v) { blocks_of_[v].push_back(static_cast<int>(b)); });
    }

    // Achievable |T| within one connected component.
    SizeWitnesses component(const VertexSet& comp) const {
        SizeWitnesses out;
        const int size = comp.size();
        out.offer(size, comp, k_);
        VertexSet rest = comp;
        rest.erase(comp.front());
        out.offer(size - 1, rest, k_);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (!blocks_[b].intersects(comp)) continue;
            const SizeWitnesses kept = keep(static_cast<int>(b), -1).first;
            for (int x = 0; x <= k_; ++x)
                if (kept.at[x]) out.offer(x, *kept.at[x], k_);
        }
        return out;
    }

private:
    // Block b in S, entered from cut vertex `parent`: achievable T inside
    // the branch below b, and the branch's vertices other than `parent`.
    std::pair<SizeWitnesses, VertexSet> keep(int b, int parent) const {
        SizeWitnesses sizes;
        sizes.at[0] = VertexSet{};
        VertexSet branch = blocks_[b];
        if (parent >= 0) branch.erase(parent);
        blocks_[b].for_each([&](int c) {
            if (c == parent) return;
            for (int child : blocks_of_[c]) {
                if (child == b) continue;
                auto [below, vertices] = keep(child, c);
                below.offer(vertices.size(), vertices, k_);
                sizes = sumset(sizes, below, k_);
                branch |= vertices;
            }
        });
        return {sizes, branch};
    }

    int k_;
    std::vector<VertexSet> blocks_;
    std::vector<std::vector<int>> blocks_of_;
};

}  // namespace

FMembership is_subgraph_of_f(const Graph& g, int k) {
    const int n = g.order();
    require(k >= 0 && k <= kMaxFamilyK, "is_subgraph_of_f supports 0 <= k <= 12");
    require(n >= k + 1, "is_subgraph_of_f needs n >= k + 1");

    const BlockTree tree(g, k);
    SizeWitnesses total;
    total.at[0] = VertexSet{};
    for (const VertexSet& comp : components(g).blocks) total = sumset(total, tree.component(comp), k);
    if (!total.at[k]) return {};
    return {true, *total.at[k]};
}

std::optional<StabilityCase> StabilityClassification::first() const {
    if (matches.empty()) return std::nullopt;
    return matches.front();
}

StabilityClassification classify_stability(const Graph& g, int k) {
    const int n = g.order();
    require(k >= 0 && k + 1 <= kMaxFamilyK, "classify_stability supports 0 <= k <= 11");
    StabilityClassification c;
    if (n >= k + 2 && is_subgraph_of_f(g, k + 1).member) c.matches.push_back(StabilityCase::A);
    if (n >= k + 4 && are_isomorphic(g, family_l(n, k + 2))) c.matches.push_back(StabilityCase::B);
    if (k == 0 && n >= 5 && embeds_spanning(g, gamma_t(n, 2))) c.matches.push_back(StabilityCase::C);
    if (k == 1 && n >= 6 && are_isomorphic(g, gamma_t(n, 3))) c.matches.push_back(StabilityCase::D);
    return c;
}

const char* to_string(StabilityCase c) {
    switch (c) {
        case StabilityCase::A: return "a";
        case StabilityCase::B: return "b";
        case StabilityCase::C: return "c";
        case StabilityCase::D: return "d";
    }
    return "?";
}

}  // namespace cyclespec
