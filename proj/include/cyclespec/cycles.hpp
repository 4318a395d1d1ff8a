#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000;

// Node-expansion budget for one cycle query: CYCLESPEC_BUDGET when set to a
// positive integer, kDefaultCycleBudget otherwise.
std::uint64_t default_cycle_budget();

class CycleBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CycleAnswer { yes, no, exhausted };

// Exact test for a cycle of exactly `length` vertices, 3 <= length <= n.
// Cycles live inside biconnected blocks, so each block is searched on its
// own: a path DFS anchored at the cycle's least vertex, with twin vertices
// used in canonical order, a failed-state memo, and reachability pruning.
CycleAnswer has_cycle_of_length(const Graph& g, int length,
                                std::uint64_t budget = default_cycle_budget());

// Whether some cycle of exactly `length` vertices uses the edge uv (which
// must be present).
CycleAnswer has_cycle_through_edge(const Graph& g, int u, int v, int length,
                                   std::uint64_t budget = default_cycle_budget());

struct CycleSpectrum {
    std::vector<int> lengths;  // ascending, each in [3, n]
    int girth = 0;             // 0 when acyclic
    int circumference = 0;
    int longest_even = 0;
    int longest_odd = 0;

    bool contains(int length) const;
    // Every length in [lo, hi] present.
    bool contains_range(int lo, int hi) const;
    bool acyclic() const { return lengths.empty(); }
};

// Throws CycleBudgetExhausted if any length query runs out of budget.
CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget = default_cycle_budget());

int girth(const Graph& g);
int circumference(const Graph& g, std::uint64_t budget = default_cycle_budget());
int longest_even_cycle(const Graph& g, std::uint64_t budget = default_cycle_budget());
int longest_odd_cycle(const Graph& g, std::uint64_t budget = default_cycle_budget());

// Lengths form the gap-free range [girth, circumference]. Throws GraphError
// on acyclic input.
bool is_weakly_pancyclic(const CycleSpectrum& s);
bool is_weakly_pancyclic(const Graph& g, std::uint64_t budget = default_cycle_budget());

bool is_hamiltonian(const Graph& g, std::uint64_t budget = default_cycle_budget());

enum class ComponentKind { vertex, edge, cycle, other };

struct ThetaStructure {
    bool has_theta = false;
    // One entry per connected component (in ComponentDecomposition order),
    // filled only when the graph is theta-free.
    std::vector<VertexSet> components;
    std::vector<ComponentKind> kinds;
};

// A graph contains two vertices joined by three internally disjoint paths
// exactly when some biconnected block has more edges than vertices.
ThetaStructure theta_structure(const Graph& g);

const char* to_string(ComponentKind kind);

}  // namespace cyclespec
