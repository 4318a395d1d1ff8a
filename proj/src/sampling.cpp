#include "cyclespec/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace cyclespec {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Graph random_gnp(Rng& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_gnm(Rng& rng, int n, int m) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    if (m < 0 || m > static_cast<int>(pairs.size())) throw GraphError("random_gnm: edge count out of range");
    // partial Fisher-Yates
    for (int i = 0; i < m; ++i) {
        const int j = uniform_int(rng, i, static_cast<int>(pairs.size()) - 1);
        std::swap(pairs[i], pairs[j]);
    }
    Graph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[i].u, pairs[i].v);
    return g;
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
    return perm;
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace cyclespec
