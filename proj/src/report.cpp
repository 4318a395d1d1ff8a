#include "cyclespec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "cyclespec/cycles.hpp"
#include "cyclespec/graph6.hpp"
#include "cyclespec/transforms.hpp"

namespace cyclespec {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json json_real(double x) {
    if (!std::isfinite(x)) return nullptr;
    const double rounded = std::strtod(format_real(x).c_str(), nullptr);
    return rounded == 0.0 ? 0.0 : rounded;
}

Json json_rational(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

Json counterexample_list(const std::vector<Counterexample>& list) {
    Json out = Json::array();
    for (const Counterexample& c : list) out.push_back({{"graph6", c.graph6}, {"violated", c.violated}});
    return out;
}

std::string param_text(const Verdict& v, const char* name, const char* fallback) {
    for (const auto& [key, value] : v.params)
        if (key == name) return std::to_string(value);
    for (const auto& [key, value] : v.params)
        if (key == fallback) return std::to_string(value);
    return "";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json verdict_json(const Verdict& v, bool timing) {
    Json j;
    j["claim"] = v.claim;
    j["domain"] = v.domain;
    j["status"] = to_string(v.status);
    j["gated"] = v.gated.empty() ? Json(nullptr) : Json(v.gated);
    Json params = Json::object();
    for (const auto& [key, value] : v.params) params[key] = value;
    j["params"] = params;
    j["counterexamples"] = counterexample_list(v.counterexamples);
    j["undecided"] = counterexample_list(v.undecided);
    Json witnesses = Json::array();
    for (const Witness& w : v.witnesses) witnesses.push_back({{"graph6", w.graph6}, {"note", w.note}});
    j["witnesses"] = witnesses;
    j["notes"] = v.notes;
    Json counters = Json::object();
    for (const auto& [key, value] : v.counters) counters[key] = value;
    j["counters"] = counters;
    Json stats;
    stats["checked"] = v.stats.checked;
    stats["applicable"] = v.stats.applicable;
    stats["seconds"] = timing ? json_real(v.stats.seconds) : Json(nullptr);
    stats["seed"] = v.stats.seed ? Json(*v.stats.seed) : Json(nullptr);
    j["stats"] = stats;
    return j;
}

std::string verdict_csv_header() { return "claim,n,k,status,checked,seconds\n"; }

std::string verdict_csv_row(const Verdict& v, bool timing) {
    return csv_field(v.claim) + "," + param_text(v, "n", "nmax") + "," + param_text(v, "k", "kmax") + "," +
           to_string(v.status) + "," + std::to_string(v.stats.checked) + "," +
           (timing ? format_real(v.stats.seconds) : std::string()) + "\n";
}

Json analyze_json(const Graph& g, double tol) {
    const int n = g.order();
    Json j;
    j["n"] = n;
    j["graph6"] = to_graph6(g);
    j["edges"] = g.edge_count();
    j["min_degree"] = n ? min_degree(g) : 0;
    j["max_degree"] = n ? max_degree(g) : 0;
    j["omega"] = clique_number(g);
    j["connected"] = is_connected(g);
    j["bipartite"] = is_bipartite(g);

    if (n <= kAnalyzeCycleMax) {
        const CycleSpectrum s = cycle_spectrum(g);
        j["cycle_lengths"] = s.lengths;
        j["girth"] = s.girth;
        j["circumference"] = s.circumference;
        j["longest_even"] = s.longest_even;
        j["longest_odd"] = s.longest_odd;
        j["weakly_pancyclic"] = s.acyclic() ? Json(nullptr) : Json(is_weakly_pancyclic(s));
        j["hamiltonian"] = n >= 3 && s.circumference == n;
    } else {
        for (const char* key : {"cycle_lengths", "girth", "circumference", "longest_even", "longest_odd",
                                "weakly_pancyclic", "hamiltonian"})
            j[key] = "skipped";
    }

    const SpectralSummary sp = spectral_summary(g, tol);
    Json spectral;
    spectral["rho"] = json_real(sp.rho);
    spectral["q"] = json_real(sp.q);
    spectral["hong"] = sp.hong_valid ? json_real(sp.hong) : Json(nullptr);
    spectral["das"] = sp.das_defined ? json_real(sp.das) : Json(nullptr);
    spectral["tol"] = json_real(sp.tol);
    j["spectral"] = spectral;

    if (n >= 1) {
        const ClosureResult cl = closure(g, n);
        Json closure_j;
        closure_j["threshold"] = n;
        closure_j["added"] = cl.added.size();
        closure_j["complete"] = cl.graph.edge_count() == n * (n - 1) / 2;
        closure_j["graph6"] = to_graph6(cl.graph);
        j["closure"] = closure_j;
    } else {
        j["closure"] = nullptr;
    }

    Json table = Json::array();
    for (int k = 0; k <= std::min(10, n - 3); ++k) {
        const Thresholds t = thresholds(n, k);
        const Rational e = g.edge_count();
        const FMembership f = is_subgraph_of_f(g, k);
        Json row;
        row["k"] = k;
        row["woodall"] = json_rational(t.woodall);
        row["refined"] = json_rational(t.refined);
        row["stability"] = json_rational(t.stability);
        row["even_cycle"] = json_rational(t.even_cycle);
        row["meets_woodall"] = e >= t.woodall;
        row["meets_refined"] = e >= t.refined;
        row["meets_stability"] = e >= t.stability;
        row["in_f"] = f.member;
        Json witness = Json::array();
        if (f.member) f.witness_t.for_each([&](int v) { witness.push_back(v); });
        row["f_witness_t"] = witness;
        table.push_back(row);
    }
    j["hamiltonian_threshold"] = n >= 3 ? json_rational(thresholds(n, 0).hamiltonian) : Json(nullptr);
    j["thresholds"] = table;
    return j;
}

Json search_json(const SearchState& s) {
    Json j;
    j["n"] = s.n;
    j["forbid"] = s.forbid;
    j["objective"] = to_string(s.objective);
    j["seed"] = s.seed;
    j["schedule"] = {{"t0", json_real(s.schedule.t0)},
                     {"t_end", json_real(s.schedule.t_end)},
                     {"steps", s.schedule.steps}};
    j["best"] = {{"graph6", to_graph6(s.best)},
                 {"objective", json_real(s.best_objective)},
                 {"edges", s.best.edge_count()}};
    Json ledger = Json::array();
    for (const LedgerEntry& e : s.ledger)
        ledger.push_back({{"step", e.step}, {"objective", json_real(e.objective)}, {"graph6", e.graph6}});
    j["ledger"] = ledger;
    j["accepted"] = s.accepted;
    j["rejected_constraint"] = s.rejected_constraint;
    j["rejected_metropolis"] = s.rejected_metropolis;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cyclespec
