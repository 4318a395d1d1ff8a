#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclespec/graph.hpp"
#include "cyclespec/spectral.hpp"

namespace cyclespec {

enum class Objective { rho, q };
const char* to_string(Objective o);
Objective parse_objective(const std::string& text);  // "rho" or "q"; GraphError otherwise

// Geometric cooling from t0 to t_end over `steps` proposals.
struct Schedule {
    double t0 = 0.5;
    double t_end = 1e-3;
    std::uint64_t steps = 20000;
};

struct LedgerEntry {
    std::uint64_t step = 0;
    double objective = 0.0;
    std::string graph6;
};

struct SearchState {
    int n = 0;
    std::vector<int> forbid;  // forbidden cycle lengths, ascending
    Objective objective = Objective::rho;
    Schedule schedule;
    std::uint64_t seed = 0;

    Graph current;
    double current_objective = 0.0;
    Graph best;
    double best_objective = 0.0;
    // every strict improvement of best, in order; each entry was re-checked
    // against the constraint with the exact cycle search
    std::vector<LedgerEntry> ledger;

    std::uint64_t accepted = 0;
    std::uint64_t rejected_constraint = 0;
    std::uint64_t rejected_metropolis = 0;
};

// Simulated annealing over single edge flips from the empty graph. Edge
// additions that would create a forbidden cycle are rejected (the added
// edge must lie on any new cycle, so only cycles through it are searched);
// the rest follow the Metropolis rule. Deterministic for a fixed seed.
// Requires 3 <= n <= 24 and forbidden lengths in [3, n].
SearchState search_extremal(int n, std::vector<int> forbid, Objective objective, const Schedule& schedule,
                            std::uint64_t seed, double tol = kDefaultTol);

}  // namespace cyclespec
