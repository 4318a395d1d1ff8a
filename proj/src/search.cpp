#include "cyclespec/search.hpp"

#include <algorithm>
#include <cmath>

#include "cyclespec/cycles.hpp"
#include "cyclespec/graph6.hpp"
#include "cyclespec/sampling.hpp"

namespace cyclespec {

const char* to_string(Objective o) { return o == Objective::rho ? "rho" : "q"; }

Objective parse_objective(const std::string& text) {
    if (text == "rho") return Objective::rho;
    if (text == "q") return Objective::q;
    throw GraphError("objective must be rho or q");
}

namespace {

double evaluate(const Graph& g, Objective o, double tol) {
    return o == Objective::rho ? spectral_radius(g, tol) : q_radius(g, tol);
}

// Adding uv keeps the graph free of every forbidden length.
bool addition_allowed(const Graph& with, int u, int v, const std::vector<int>& forbid) {
    for (int l : forbid)
        if (has_cycle_through_edge(with, u, v, l) != CycleAnswer::no) return false;
    return true;
}

bool satisfies(const Graph& g, const std::vector<int>& forbid) {
    for (int l : forbid)
        if (has_cycle_of_length(g, l) != CycleAnswer::no) return false;
    return true;
}

}  // namespace

SearchState search_extremal(int n, std::vector<int> forbid, Objective objective, const Schedule& schedule,
                            std::uint64_t seed, double tol) {
    if (n < 3 || n > 24) throw GraphError("search supports 3 <= n <= 24");
    std::sort(forbid.begin(), forbid.end());
    forbid.erase(std::unique(forbid.begin(), forbid.end()), forbid.end());
    for (int l : forbid)
        if (l < 3 || l > n) throw GraphError("forbidden cycle lengths must lie in [3, n]");
    if (!(schedule.t0 > 0) || !(schedule.t_end > 0) || schedule.steps == 0)
        throw GraphError("schedule needs positive temperatures and steps");

    SearchState s;
    s.n = n;
    s.forbid = forbid;
    s.objective = objective;
    s.schedule = schedule;
    s.seed = seed;
    s.current = Graph(n);
    s.current_objective = 0.0;
    s.best = s.current;
    s.best_objective = 0.0;
    s.ledger.push_back({0, 0.0, to_graph6(s.best)});

    Rng rng = make_rng(seed, 0);
    const double ratio = schedule.t_end / schedule.t0;
    for (std::uint64_t step = 1; step <= schedule.steps; ++step) {
        const double temperature =
            schedule.t0 * std::pow(ratio, static_cast<double>(step - 1) / static_cast<double>(schedule.steps));
        const int u = uniform_int(rng, 0, n - 1);
        int v = uniform_int(rng, 0, n - 2);
        if (v >= u) ++v;
        const double coin = uniform_real(rng, 0.0, 1.0);

        Graph next = s.current;
        next.toggle_edge(u, v);
        if (next.adjacent(u, v) && !addition_allowed(next, u, v, forbid)) {
            ++s.rejected_constraint;
            continue;
        }
        const double value = evaluate(next, objective, tol);
        const double delta = value - s.current_objective;
        if (delta < 0 && coin >= std::exp(delta / temperature)) {
            ++s.rejected_metropolis;
            continue;
        }
        ++s.accepted;
        s.current = std::move(next);
        s.current_objective = value;
        if (value > s.best_objective + 1e-12) {
            if (!satisfies(s.current, forbid))
                throw std::logic_error("search accepted a graph with a forbidden cycle: " + to_graph6(s.current));
            s.best = s.current;
            s.best_objective = value;
            s.ledger.push_back({step, value, to_graph6(s.best)});
        }
    }
    return s;
}

}  // namespace cyclespec
