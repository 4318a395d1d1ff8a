#include <gtest/gtest.h>

#include <algorithm>

#include "cyclespec/canonical.hpp"
#include "cyclespec/cycles.hpp"
#include "cyclespec/families.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/graph6.hpp"
#include "cyclespec/sampling.hpp"
#include "cyclespec/spectral.hpp"
#include "oracles.hpp"

using namespace cyclespec;

namespace {

std::int64_t c2(std::int64_t m) { return m * (m - 1) / 2; }

std::uint32_t pair_bit(int n, int u, int v) { return std::uint32_t{1} << oracle::edge_index(n, u, v); }

// Every labeled member of the family with S = {0..n-k-1}: each block of a
// set partition of T = {n-k..n-1} is a clique joined to one anchor in S.
std::vector<std::uint32_t> f_members(int n, int k) {
    std::vector<std::uint32_t> out;
    const int s = n - k;
    std::uint32_t base = 0;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) base |= pair_bit(n, u, v);
    std::vector<int> block(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> partitions = [&](int i, int blocks) {
        if (i == k) {
            std::vector<int> anchor(static_cast<std::size_t>(blocks), 0);
            std::function<void(int)> anchors = [&](int b) {
                if (b == blocks) {
                    std::uint32_t m = base;
                    for (int x = 0; x < k; ++x) {
                        m |= pair_bit(n, s + x, anchor[block[x]]);
                        for (int y = x + 1; y < k; ++y)
                            if (block[x] == block[y]) m |= pair_bit(n, s + x, s + y);
                    }
                    out.push_back(m);
                    return;
                }
                for (int a = 0; a < s; ++a) {
                    anchor[b] = a;
                    anchors(b + 1);
                }
            };
            anchors(0);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[i] = b;
            partitions(i + 1, std::max(blocks, b + 1));
        }
    };
    partitions(0, 0);
    return out;
}

bool oracle_in_f(const Graph& g, int k, const std::vector<std::uint32_t>& members) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::uint32_t m = 0;
        for (const Edge& e : g.edges()) m |= pair_bit(n, perm[e.u], perm[e.v]);
        for (std::uint32_t member : members)
            if ((m & ~member) == 0) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)k;
    return false;
}

}  // namespace

TEST(Families, EdgeFormulas) {
    EXPECT_EQ(family_l(10, 2).edge_count(), 31);
    EXPECT_EQ(gamma_t(10, 2).edge_count(), 32);
    EXPECT_EQ(woodall_gamma(9, 1).edge_count(), 24);
    EXPECT_EQ(family_l(11, 1).edge_count(), 46);
    for (int n = 3; n <= 40; ++n) {
        for (int k = 0; k + 2 <= n; ++k) {
            ASSERT_EQ(family_l(n, k).edge_count(), c2(n - k - 1) + c2(k) + (n - 1));
            ASSERT_EQ(family_l_edges(n, k), c2(n - k - 1) + c2(k) + (n - 1));
        }
        for (int t = 1; t + 3 <= n; ++t) {
            ASSERT_EQ(gamma_t(n, t).edge_count(), 1 + c2(n - t - 2) + 2 * (n - 2));
            ASSERT_EQ(gamma_t_edges(n, t), gamma_t(n, t).edge_count());
        }
        for (int k = 0; 2 * k + 3 <= n; ++k) {
            ASSERT_EQ(woodall_gamma(n, k).edge_count(), c2(n - k - 1) + c2(k + 2));
            ASSERT_EQ(woodall_gamma_edges(n, k), woodall_gamma(n, k).edge_count());
            ASSERT_EQ(Rational(woodall_gamma(n, k).edge_count() + 1), thresholds(n, k).woodall);
        }
        for (int k = 1; k < n; ++k) {
            ASSERT_EQ(s_nk(n, k).edge_count(), c2(k) + k * (n - k));
            if (n - k >= 2) ASSERT_EQ(s_nk_plus(n, k).edge_count(), c2(k) + k * (n - k) + 1);
        }
        if (n >= 2) ASSERT_EQ(turan2(n).edge_count(), (n / 2) * ((n + 1) / 2));
    }
}

TEST(Families, Structure) {
    EXPECT_EQ(family_l(7, 0), named::complete(7));
    EXPECT_EQ(cut_vertices(family_l(10, 2)).size(), 1);
    EXPECT_TRUE(are_isomorphic(gamma_t(6, 3), join(named::complete(2), named::empty(4))));
    EXPECT_TRUE(are_isomorphic(woodall_gamma(8, 0),
                               Graph::build(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3},
                                                {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4},
                                                {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {0, 7}})));
    EXPECT_TRUE(are_isomorphic(s_nk(5, 1), named::star(4)));
    EXPECT_TRUE(is_bipartite(s_nk(5, 1)));
    EXPECT_EQ(turan2(4), named::complete_bipartite(2, 2));
    EXPECT_TRUE(are_isomorphic(turan2(4), named::cycle(4)));
    EXPECT_NEAR(spectral_radius(turan2(10)), 5.0, 1e-10);
}

TEST(Families, CycleFacts) {
    const CycleSpectrum l = cycle_spectrum(family_l(10, 2));
    EXPECT_EQ(l.circumference, 8);
    EXPECT_FALSE(l.contains(9));
    EXPECT_FALSE(l.contains(10));
    EXPECT_FALSE(is_hamiltonian(gamma_t(10, 2)));
    EXPECT_EQ(circumference(woodall_gamma(9, 1)), 7);
    EXPECT_EQ(cycle_spectrum(s_nk_plus(5, 1)).lengths, std::vector<int>{3});
}

TEST(Families, RangeErrors) {
    EXPECT_THROW(family_l(3, 5), GraphError);
    EXPECT_THROW(family_l(5, -1), GraphError);
    EXPECT_THROW(gamma_t(5, 3), GraphError);
    EXPECT_THROW(gamma_t(8, 0), GraphError);
    EXPECT_THROW(woodall_gamma(6, 2), GraphError);
    EXPECT_THROW(s_nk(4, 4), GraphError);
    EXPECT_THROW(s_nk(4, 0), GraphError);
    EXPECT_THROW(s_nk_plus(4, 3), GraphError);
    EXPECT_THROW(turan2(1), GraphError);
    EXPECT_THROW(thresholds(4, 2), GraphError);
    EXPECT_THROW(family_l(130, 1), GraphError);
}

TEST(Thresholds, Values) {
    const Thresholds t91 = thresholds(9, 1);
    EXPECT_EQ(t91.woodall, Rational(25));
    EXPECT_EQ(t91.refined, Rational(24));
    EXPECT_EQ(t91.stability, Rational(21));
    EXPECT_EQ(thresholds(11, 0).refined, Rational(46));
    EXPECT_EQ(thresholds(5, 1).even_cycle, Rational(6));
    EXPECT_EQ(thresholds(6, 2).even_cycle, Rational(25, 2));
    EXPECT_EQ(thresholds(7, 1).hamiltonian, Rational(16));
}

TEST(Spec, Parse) {
    const FamilySpec l = parse_family_spec("L:10,2");
    EXPECT_EQ(l.kind, FamilyKind::L);
    EXPECT_EQ(l.n, 10);
    EXPECT_EQ(l.param, 2);
    EXPECT_EQ(l.to_string(), "L:10,2");
    EXPECT_EQ(l.build().edge_count(), 31);
    EXPECT_EQ(parse_family_spec("T2:4").build(), turan2(4));
    EXPECT_EQ(parse_family_spec("S+:6,2").build(), s_nk_plus(6, 2));
    EXPECT_EQ(parse_family_spec("GammaT:10,2").build(), gamma_t(10, 2));
    EXPECT_EQ(parse_family_spec("WG:9,1").build(), woodall_gamma(9, 1));
    EXPECT_EQ(parse_family_spec("S:5,1").to_string(), "S:5,1");
    EXPECT_THROW(parse_family_spec("L10,2"), GraphError);
    EXPECT_THROW(parse_family_spec("Q:10,2"), GraphError);
    EXPECT_THROW(parse_family_spec("L:10"), GraphError);
    EXPECT_THROW(parse_family_spec("L:10,"), GraphError);
    EXPECT_THROW(parse_family_spec("L:a,2"), GraphError);
    EXPECT_THROW(parse_family_spec("T2:4,1"), GraphError);
    EXPECT_THROW(parse_family_spec("L:3,5").build(), GraphError);
}

TEST(FMembership, Examples) {
    const FMembership l = is_subgraph_of_f(family_l(10, 2), 2);
    EXPECT_TRUE(l.member);
    EXPECT_EQ(l.witness_t.size(), 2);
    EXPECT_FALSE(is_subgraph_of_f(named::complete(10), 2).member);
    EXPECT_TRUE(is_subgraph_of_f(named::complete(10), 0).member);
    EXPECT_THROW(is_subgraph_of_f(named::complete(20), 13), GraphError);
    EXPECT_THROW(is_subgraph_of_f(named::complete(3), 3), GraphError);
}

TEST(FMembership, WitnessIsValid) {
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = make_rng(107, trial);
        const int n = uniform_int(rng, 4, 14);
        const int k = uniform_int(rng, 0, std::min(4, n - 1));
        const Graph g = random_gnp(rng, n, uniform_real(rng, 0.05, 0.5));
        const FMembership f = is_subgraph_of_f(g, k);
        if (!f.member) continue;
        ASSERT_EQ(f.witness_t.size(), k);
        // each component of G[T] sees at most one vertex outside T
        const Reindexed sub = induced_subgraph(g, f.witness_t);
        for (const VertexSet& comp : components(sub.graph).blocks) {
            VertexSet anchors;
            comp.for_each([&](int i) { anchors |= g.neighbors(sub.original_label[i]).minus(f.witness_t); });
            ASSERT_LE(anchors.size(), 1);
        }
    }
}

TEST(FMembership, MatchesMemberEnumeration) {
    for (int n = 4; n <= 7; ++n) {
        for (int k = 0; k <= std::min(3, n - 1); ++k) {
            const auto members = f_members(n, k);
            for (int trial = 0; trial < 40; ++trial) {
                Rng rng = make_rng(109 + n * 10 + k, trial);
                const Graph g = random_gnm(rng, n, uniform_int(rng, 0, n * (n - 1) / 2));
                ASSERT_EQ(is_subgraph_of_f(g, k).member, oracle_in_f(g, k, members))
                    << n << " " << k << " " << trial;
            }
        }
    }
}

TEST(FMembership, MatchesSubsetScan) {
    for (int trial = 0; trial < 3000; ++trial) {
        Rng rng = make_rng(113, trial);
        const int n = uniform_int(rng, 2, 14);
        const int k = uniform_int(rng, 0, std::min(6, n - 1));
        // sparse draws exercise trees and cactus-like block structure
        const Graph g = random_gnm(rng, n, uniform_int(rng, 0, std::min(n * (n - 1) / 2, 2 * n)));
        ASSERT_EQ(is_subgraph_of_f(g, k).member, oracle::f_member_by_subsets(g, k))
            << to_graph6(g) << " k " << k;
    }
}

TEST(FMembership, LargeOrderIsFast) {
    EXPECT_TRUE(is_subgraph_of_f(family_l(60, 3), 3).member);
    for (int k = 4; k <= 10; ++k) EXPECT_FALSE(is_subgraph_of_f(family_l(60, 3), k).member) << k;
    EXPECT_TRUE(is_subgraph_of_f(named::star(59), 12).member);
    EXPECT_TRUE(is_subgraph_of_f(named::path(100), 12).member);
}

TEST(Stability, Examples) {
    // the three-vertex clique of L(20,3) reaches both the cut vertex and its
    // own neighbors, so no two-vertex T leaves single-anchor components
    const auto l203 = classify_stability(family_l(20, 3), 1);
    EXPECT_EQ(l203.matches, std::vector<StabilityCase>{StabilityCase::B});
    EXPECT_EQ(l203.first(), StabilityCase::B);

    const auto gt = classify_stability(gamma_t(20, 2), 0);
    EXPECT_EQ(gt.matches, std::vector<StabilityCase>{StabilityCase::C});

    EXPECT_TRUE(classify_stability(named::complete(20), 0).none());
    EXPECT_FALSE(classify_stability(named::complete(20), 0).first().has_value());

    const auto g3 = classify_stability(gamma_t(20, 3), 1);
    EXPECT_EQ(g3.matches, std::vector<StabilityCase>{StabilityCase::D});

    const auto l172 = classify_stability(family_l(17, 2), 0);
    EXPECT_EQ(l172.matches, std::vector<StabilityCase>{StabilityCase::B});
    EXPECT_STREQ(to_string(StabilityCase::C), "c");
}

TEST(Stability, SmallLMatchesMemberOracle) {
    // L(n,k+2) is not inside any member of F_{n,k+1}
    EXPECT_FALSE(oracle_in_f(family_l(8, 3), 2, f_members(8, 2)));
    EXPECT_FALSE(is_subgraph_of_f(family_l(8, 3), 2).member);
    EXPECT_FALSE(oracle_in_f(family_l(7, 2), 1, f_members(7, 1)));
    EXPECT_FALSE(is_subgraph_of_f(family_l(7, 2), 1).member);
    EXPECT_TRUE(oracle_in_f(family_l(8, 3), 3, f_members(8, 3)));
}

TEST(Stability, ExtremalIdentificationSampled) {
    // among subgraphs of family members, only L(n,k) reaches rho(L(n,k))
    for (int n = 8; n <= 14; n += 2) {
        for (int k = 1; 2 * k + 4 <= n; ++k) {
            const double target = spectral_radius(family_l(n, k));
            for (int trial = 0; trial < 40; ++trial) {
                Rng rng = make_rng(113 + n * 16 + k, trial);
                // random member: T blocks of random sizes hung on random anchors
                Graph g = named::complete(n - k);
                g = disjoint_union(g, named::empty(k));
                int x = n - k;
                while (x < n) {
                    const int size = uniform_int(rng, 1, n - x);
                    const int anchor = uniform_int(rng, 0, n - k - 1);
                    for (int a = x; a < x + size; ++a) {
                        g.add_edge(a, anchor);
                        for (int b = a + 1; b < x + size; ++b) g.add_edge(a, b);
                    }
                    x += size;
                }
                const int drops = uniform_int(rng, 0, 2);
                for (int d = 0; d < drops && g.edge_count() > 0; ++d) {
                    const auto edges = g.edges();
                    const Edge e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
                    g.remove_edge(e.u, e.v);
                }
                ASSERT_TRUE(is_subgraph_of_f(g, k).member);
                if (spectral_radius(g) >= target - 1e-9)
                    ASSERT_TRUE(are_isomorphic(g, family_l(n, k))) << n << " " << k << " " << trial;
            }
        }
    }
}
