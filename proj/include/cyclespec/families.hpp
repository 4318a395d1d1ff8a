#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cyclespec/graph.hpp"

namespace cyclespec {

using Rational = boost::rational<std::int64_t>;

std::int64_t binomial2(std::int64_t m);  // C(m, 2), zero for m < 2

// K_1 v (K_{n-k-1} + K_k): vertex 0 is the join vertex, 1..n-k-1 the big
// clique, the last k vertices the small clique. Requires n >= k + 2, k >= 0.
Graph family_l(int n, int k);
// K_2 v (K_{n-t-2} + t K_1): vertices 0,1 are the hubs, then the clique,
// then the t independent vertices. Requires t >= 1, n >= t + 3.
Graph gamma_t(int n, int t);
// Cliques on n-k-1 and k+2 vertices sharing vertex 0. Requires n >= 2k + 3.
Graph woodall_gamma(int n, int k);
// K_k v (n-k) K_1. Requires n > k >= 1.
Graph s_nk(int n, int k);
// s_nk plus one edge inside the independent part. Requires n - k >= 2.
Graph s_nk_plus(int n, int k);
// K_{ceil(n/2), floor(n/2)}. Requires n >= 2.
Graph turan2(int n);

// Edge-count formulas for the constructions, evaluated independently of them.
std::int64_t family_l_edges(int n, int k);
std::int64_t gamma_t_edges(int n, int t);
std::int64_t woodall_gamma_edges(int n, int k);

struct Thresholds {
    Rational woodall;      // C(n-k-1,2) + C(k+2,2) + 1
    Rational refined;      // C(n-k-1,2) + C(k+2,2)
    Rational stability;    // C(n-k-2,2) + C(k+3,2)
    Rational even_cycle;   // (2k+1)(n-1)/2
    Rational hamiltonian;  // C(n-1,2) + 1
};

// Requires n >= k + 3, k >= 0.
Thresholds thresholds(int n, int k);

enum class FamilyKind { L, GammaT, WoodallGamma, Snk, SnkPlus, Turan2 };

struct FamilySpec {
    FamilyKind kind = FamilyKind::L;
    int n = 0;
    int param = 0;  // k or t; unused for Turan2

    Graph build() const;
    std::string to_string() const;  // "L:10,2" style
};

// Parses NAME ":" params, NAME in {L, GammaT, WG, S, S+, T2}. Throws
// GraphError on grammar errors; range errors surface from build().
FamilySpec parse_family_spec(std::string_view text);

// Some S with |S| = n - k such that every component H of G - S has at most
// one neighbor in S; T = V - S is reported as the witness. Equivalent to G
// being a subgraph of a member of the family F_{n,k}.
struct FMembership {
    bool member = false;
    VertexSet witness_t;
};

inline constexpr int kMaxFamilyK = 12;

FMembership is_subgraph_of_f(const Graph& g, int k);

enum class StabilityCase { A, B, C, D };

struct StabilityClassification {
    std::vector<StabilityCase> matches;  // in order A, B, C, D
    bool none() const { return matches.empty(); }
    std::optional<StabilityCase> first() const;
};

// All of: (A) G within some member of F_{n,k+1}; (B) G isomorphic to
// L(n,k+2); (C) k = 0 and G a spanning subgraph of gamma_t(n,2);
// (D) k = 1 and G isomorphic to gamma_t(n,3).
StabilityClassification classify_stability(const Graph& g, int k);

const char* to_string(StabilityCase c);

}  // namespace cyclespec
