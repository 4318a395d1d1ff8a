#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclespec/families.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/sampling.hpp"
#include "cyclespec/spectral.hpp"
#include "oracles.hpp"

using namespace cyclespec;

TEST(Spectral, CompleteGraphs) {
    for (int n = 1; n <= 60; ++n) {
        EXPECT_NEAR(spectral_radius(named::complete(n)), n - 1, 1e-10) << n;
        EXPECT_NEAR(q_radius(named::complete(n)), n == 1 ? 0 : 2 * n - 2, 1e-10) << n;
    }
}

TEST(Spectral, ClosedForms) {
    EXPECT_NEAR(spectral_radius(named::complete_bipartite(5, 5)), 5.0, 1e-10);
    EXPECT_NEAR(spectral_radius(named::path(4)), 2 * std::cos(std::numbers::pi / 5), 1e-8);
    EXPECT_NEAR(q_radius(named::star(3)), 4.0, 1e-8);
    EXPECT_EQ(q_radius(named::empty(1)), 0.0);
    EXPECT_EQ(spectral_radius(named::empty(1)), 0.0);
    EXPECT_EQ(spectral_radius(Graph(0)), 0.0);
    EXPECT_EQ(spectral_radius(named::empty(6)), 0.0);
    EXPECT_NEAR(spectral_radius(named::petersen()), 3.0, 1e-10);
    EXPECT_NEAR(spectral_radius(named::cycle(7)), 2.0, 1e-10);
    for (int m = 2; m <= 12; ++m) {
        EXPECT_NEAR(spectral_radius(named::path(m)), 2 * std::cos(std::numbers::pi / (m + 1)), 1e-9);
        EXPECT_NEAR(q_radius(named::star(m)), m + 1, 1e-9);
        EXPECT_NEAR(spectral_radius(named::star(m)), std::sqrt(m), 1e-9);
    }
}

TEST(Spectral, ToleranceValidation) {
    EXPECT_THROW(spectral_radius(named::cycle(5), 1e-14), SpectralError);
    EXPECT_THROW(spectral_radius(named::cycle(5), 0.0), SpectralError);
    EXPECT_NO_THROW(spectral_radius(named::cycle(5), kMinTol));
}

TEST(Spectral, DisconnectedIsMaxOfComponents) {
    const Graph g = disjoint_union(named::cycle(5), disjoint_union(named::complete(4), named::star(6)));
    EXPECT_NEAR(spectral_radius(g), 3.0, 1e-10);
    EXPECT_NEAR(q_radius(g), 7.0, 1e-9);
}

TEST(Hong, Examples) {
    const HongBound k4 = hong_bound(named::complete(4));
    EXPECT_TRUE(k4.valid);
    EXPECT_NEAR(k4.value, 3.0, 1e-12);
    EXPECT_NEAR(k4.value, spectral_radius(named::complete(4)), 1e-9);
    const HongBound c5 = hong_bound(named::cycle(5));
    EXPECT_NEAR(c5.value, std::sqrt(6.0), 1e-12);
    EXPECT_FALSE(hong_bound(disjoint_union(named::complete(2), named::complete(1))).valid);
}

TEST(Das, Examples) {
    for (int n = 2; n <= 20; ++n)
        EXPECT_NEAR(das_bound(named::complete(n)), q_radius(named::complete(n)), 1e-9);
    EXPECT_NEAR(das_bound(named::empty(5)), 3.0, 1e-12);
    EXPECT_NEAR(das_bound(named::star(3)), 4.0, 1e-12);
    for (int m = 1; m <= 15; ++m) EXPECT_NEAR(das_bound(named::star(m)), q_radius(named::star(m)), 1e-9);
    EXPECT_THROW(das_bound(named::empty(1)), GraphError);
}

TEST(SunDas, Examples) {
    for (int v = 0; v < 3; ++v) {
        const auto s = sun_das_check(named::complete(3), v);
        EXPECT_TRUE(s.deletion_applies);
        EXPECT_NEAR(s.deletion_lhs, 1.0, 1e-9);
        EXPECT_NEAR(s.deletion_rhs, 1.0, 1e-9);
    }
    const auto c4 = sun_das_check(named::cycle(4), 0);
    EXPECT_NEAR(c4.deletion_lhs, 2.0, 1e-9);
    EXPECT_NEAR(c4.deletion_rhs, 1.0, 1e-9);
    const auto k2 = sun_das_check(named::complete(2), 1);
    EXPECT_NEAR(k2.deletion_lhs, 0.0, 1e-9);
    EXPECT_NEAR(k2.deletion_rhs, 0.0, 1e-9);
    EXPECT_FALSE(sun_das_check(named::empty(3), 0).deletion_applies);
}

TEST(Spectral, SummaryFields) {
    const SpectralSummary s = spectral_summary(named::complete(5));
    EXPECT_NEAR(s.rho, 4.0, 1e-10);
    EXPECT_NEAR(s.q, 8.0, 1e-10);
    EXPECT_TRUE(s.hong_valid);
    EXPECT_TRUE(s.das_defined);
    EXPECT_EQ(s.tol, kDefaultTol);
    EXPECT_GT(s.iterations, 0u);
    EXPECT_FALSE(spectral_summary(named::empty(1)).das_defined);
}

TEST(Spectral, MatchesCharPolyOracle) {
    for (int trial = 0; trial < 150; ++trial) {
        Rng rng = make_rng(23, trial);
        const int n = uniform_int(rng, 2, 8);
        const Graph g = random_gnp(rng, n, uniform_real(rng, 0.2, 0.9));
        const double rho = oracle::CharPolyRadius::largest(oracle::CharPolyRadius::adjacency(g, false));
        const double q = oracle::CharPolyRadius::largest(oracle::CharPolyRadius::adjacency(g, true));
        ASSERT_NEAR(spectral_radius(g), rho, 1e-7) << trial;
        ASSERT_NEAR(q_radius(g), q, 1e-7) << trial;
    }
}

TEST(Spectral, BoundsAndMonotonicity) {
    for (int trial = 0; trial < 300; ++trial) {
        Rng rng = make_rng(29, trial);
        const int n = uniform_int(rng, 2, 24);
        const Graph g = random_gnp(rng, n, uniform_real(rng, 0.1, 0.95));
        const double rho = spectral_radius(g);
        const double q = q_radius(g);
        ASSERT_GE(rho + 1e-9, 2.0 * g.edge_count() / n);
        ASSERT_LE(rho, n - 1 + 1e-9);
        ASSERT_LE(q, das_bound(g) + 1e-9);
        const HongBound hb = hong_bound(g);
        if (hb.valid) ASSERT_LE(rho, hb.value + 1e-9);
        for (int v = 0; v < n; ++v) {
            const auto s = sun_das_check(g, v);
            if (s.deletion_applies) ASSERT_GE(s.deletion_lhs, s.deletion_rhs - 1e-9);
            ASSERT_LE(s.growth_lhs, s.growth_rhs + 1e-9);
        }
        if (is_connected(g) && g.edge_count() < n * (n - 1) / 2) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) {
                        const Graph h = g.with_edge(u, v);
                        ASSERT_GT(spectral_radius(h), rho + 1e-9);
                        ASSERT_GT(q_radius(h), q + 1e-9);
                        u = n;
                        break;
                    }
        }
    }
}

TEST(Spectral, RelabelInvariant) {
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng = make_rng(31, trial);
        const int n = uniform_int(rng, 3, 30);
        const Graph g = random_gnp(rng, n, 0.4);
        const Graph h = relabel(g, random_permutation(rng, n));
        ASSERT_NEAR(spectral_radius(g), spectral_radius(h), 1e-9);
        ASSERT_NEAR(q_radius(g), q_radius(h), 1e-9);
    }
}

TEST(Spectral, FamilyOrdering) {
    // the L-chain decreases in k and L(n,1) beats gamma_t(n,2)
    for (int n = 8; n <= 20; ++n) {
        for (int k = 1; 2 * k + 4 <= n; ++k) {
            EXPECT_GT(spectral_radius(family_l(n, k)) - spectral_radius(family_l(n, k + 1)), 1e-8);
            EXPECT_GT(q_radius(family_l(n, k)) - q_radius(family_l(n, k + 1)), 1e-8);
        }
        EXPECT_GT(spectral_radius(family_l(n, 1)), spectral_radius(gamma_t(n, 2)) + 1e-8);
    }
}
