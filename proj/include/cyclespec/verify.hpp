#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclespec/spectral.hpp"
#include "cyclespec/sweep.hpp"

namespace cyclespec {

enum class Status { verified, counterexample, inconclusive };
const char* to_string(Status s);

struct VerdictStats {
    std::uint64_t checked = 0;     // instances examined
    std::uint64_t applicable = 0;  // instances meeting the claim's hypothesis
    double seconds = 0.0;
    std::optional<std::uint64_t> seed;
};

// Outcome of one claim check. status is counterexample exactly when
// counterexamples is nonempty; a claim whose order bound is unmet is
// reported inconclusive with `gated` naming the bound, unless the sweep was
// forced, in which case `gated` still records it.
struct Verdict {
    std::string claim;
    std::string domain;
    Status status = Status::verified;
    std::string gated;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> undecided;  // numeric ties and similar
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::map<std::string, std::uint64_t> counters;
    VerdictStats stats;
};

struct SweepMode {
    bool exhaustive = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static SweepMode exhaustive_mode() { return {true, 0, 0}; }
    static SweepMode sampled(std::uint64_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

struct RunOptions {
    int jobs = 1;           // 0 = all cores
    bool force = false;     // run even when the order bound is unmet
    double tol = kDefaultTol;
};

// Margin for every spectral comparison.
inline constexpr double kSpectralMargin = 1e-9;

// Theorem-style claims at (n, k). Exhaustive modes enumerate labeled
// graphs (dense claims via their few non-edges); sampled modes draw seeded
// random instances and add every family construction on n vertices and its
// one-edge perturbations. Cycle-search budget exhaustion propagates as
// CycleBudgetExhausted.
Verdict check_woodall(int n, int k, const SweepMode& mode, const RunOptions& opts = {});
Verdict check_refined_woodall(int n, int k, const SweepMode& mode, const RunOptions& opts = {});
Verdict check_stability(int n, int k, const SweepMode& mode, const RunOptions& opts = {});
Verdict check_spectral_theorem(int n, int k, const SweepMode& mode, const RunOptions& opts = {});
Verdict check_even_cycle_bound(int n, int k, const SweepMode& mode, const RunOptions& opts = {});
Verdict check_closure_clique(int n, int k, const SweepMode& mode, const RunOptions& opts = {});

// Property sweeps over seeded random graphs with 2 <= order <= n_max.
Verdict check_kelmans_monotone(std::uint64_t trials, std::uint64_t seed, int n_max = 24,
                               const RunOptions& opts = {});
Verdict check_hong_bound(std::uint64_t trials, std::uint64_t seed, int n_max = 24, const RunOptions& opts = {});
Verdict check_das_bound(std::uint64_t trials, std::uint64_t seed, int n_max = 24, const RunOptions& opts = {});
Verdict check_sun_das(std::uint64_t trials, std::uint64_t seed, int n_max = 24, const RunOptions& opts = {});
Verdict check_bondy_pancyclic(std::uint64_t trials, std::uint64_t seed, int n_max = 24,
                              const RunOptions& opts = {});

// Exhaustive over every order 3..n_max (labeled graphs up to 7 vertices,
// isomorphism classes at 8).
Verdict check_closure_circumference(int n_max, const RunOptions& opts = {});
Verdict check_ore(int n_max, const RunOptions& opts = {});

// Radius orderings among L(n,k), gamma_t(n,2), gamma_t(n,3), and the
// extremality of L(n,k) among maximal family members.
Verdict check_family_comparisons(int k_max, int n_max, const RunOptions& opts = {});

// rho(G) > sqrt(floor(n^2/4)) by more than the spectral margin.
bool quarter_n_applicable(const Graph& g, double tol = kDefaultTol);

// Graphs with rho > sqrt(floor(n^2/4)) contain every C_l, l <= ceil(n/4);
// `trials` applicable instances per order.
Verdict check_quarter_n_property(const std::vector<int>& orders, std::uint64_t trials, std::uint64_t seed,
                                 const RunOptions& opts = {});

}  // namespace cyclespec
