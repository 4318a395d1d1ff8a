#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclespec/canonical.hpp"
#include "cyclespec/cycles.hpp"
#include "cyclespec/families.hpp"
#include "cyclespec/graph6.hpp"
#include "cyclespec/report.hpp"
#include "cyclespec/search.hpp"
#include "cyclespec/verify.hpp"

using namespace cyclespec;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::optional<int> n, k, nmax, kmax;
    std::optional<std::uint64_t> trials, seed, steps;
    std::optional<double> t;
    double tol = kDefaultTol;
    bool exhaustive = false;
    bool sampled = false;
    bool force = false;
    bool timing = false;
    bool canonical = false;
    int jobs = 0;
    std::string out;
    std::string format;  // empty: the command's default
    std::string from = "graph6";
    std::string objective = "rho";
    std::vector<int> forbid;
    std::string claim;
    std::string spec;
    std::vector<std::string> inputs;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.out);
    f << text;
}

// Fills in the default (first allowed) format and rejects the rest.
void require_format(Options& o, std::initializer_list<const char*> allowed) {
    if (o.format.empty()) o.format = *allowed.begin();
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError("format " + o.format + " not supported by this command");
}

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

std::vector<std::string> input_lines(const Options& o) {
    std::vector<std::string> lines = o.inputs;
    if (lines.empty()) {
        std::string line;
        while (std::getline(std::cin, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw UsageError("no input graphs");
    return lines;
}

int exit_code(Status s) {
    switch (s) {
        case Status::verified: return kExitVerified;
        case Status::counterexample: return kExitCounterexample;
        case Status::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int run_gen(Options& o) {
    require_format(o, {"graph6", "json"});
    const FamilySpec spec = parse_family_spec(o.spec);
    const Graph g = spec.build();
    if (o.format == "json") {
        Json j;
        j["spec"] = spec.to_string();
        j["graph6"] = to_graph6(g);
        emit(o, dump(j));
    } else {
        emit(o, to_graph6(g) + "\n");
    }
    return 0;
}

int run_analyze(Options& o) {
    require_format(o, {"json"});
    const std::vector<std::string> lines = input_lines(o);
    Json reports = Json::array();
    for (const std::string& line : lines) reports.push_back(analyze_json(from_graph6(line), o.tol));
    emit(o, dump(lines.size() == 1 ? reports.front() : reports));
    return 0;
}

Graph graph_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("edge-list json: ") + e.what());
    }
}

int run_convert(Options& o) {
    require_format(o, {"graph6", "json", "csv"});
    std::vector<Graph> graphs;
    if (o.from == "graph6") {
        for (const std::string& line : input_lines(o)) graphs.push_back(from_graph6(line));
    } else if (o.from == "json") {
        for (const std::string& line : input_lines(o)) graphs.push_back(graph_from_json(line));
    } else {
        throw UsageError("--from must be graph6 or json");
    }
    std::ostringstream out;
    for (Graph g : graphs) {
        if (o.canonical) {
            const std::vector<int> perm = canonical_labeling(g);
            g = relabel(g, perm);
        }
        if (o.format == "graph6") {
            out << to_graph6(g) << "\n";
        } else if (o.format == "json") {
            Json j;
            j["n"] = g.order();
            Json edges = Json::array();
            for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
            j["edges"] = edges;
            out << j.dump() << "\n";
        } else {
            out << "u,v\n";
            for (const Edge& e : g.edges()) out << e.u << "," << e.v << "\n";
        }
    }
    emit(o, out.str());
    return 0;
}

SweepMode sweep_mode(const Options& o) {
    if (o.exhaustive && o.sampled) throw UsageError("--exhaustive and --sampled are exclusive");
    if (o.exhaustive) return SweepMode::exhaustive_mode();
    return SweepMode::sampled(o.trials.value_or(1000), o.seed.value_or(0));
}

Verdict dispatch(const Options& o) {
    RunOptions run;
    run.jobs = o.jobs;
    run.force = o.force;
    run.tol = o.tol;
    const std::string& c = o.claim;
    const std::uint64_t trials = o.trials.value_or(1000);
    const std::uint64_t seed = o.seed.value_or(0);
    if (c == "woodall") return check_woodall(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "refined") return check_refined_woodall(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "stability") return check_stability(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "spectral") return check_spectral_theorem(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "even-cycle") return check_even_cycle_bound(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "closure-clique") return check_closure_clique(need(o.n, "--n"), need(o.k, "--k"), sweep_mode(o), run);
    if (c == "kelmans") return check_kelmans_monotone(trials, seed, o.nmax.value_or(24), run);
    if (c == "hong") return check_hong_bound(trials, seed, o.nmax.value_or(24), run);
    if (c == "das") return check_das_bound(trials, seed, o.nmax.value_or(24), run);
    if (c == "sun-das") return check_sun_das(trials, seed, o.nmax.value_or(24), run);
    if (c == "bondy") return check_bondy_pancyclic(trials, seed, o.nmax.value_or(24), run);
    if (c == "closure") return check_closure_circumference(o.nmax.value_or(7), run);
    if (c == "ore") return check_ore(o.nmax.value_or(7), run);
    if (c == "family-cmp") return check_family_comparisons(o.kmax.value_or(10), o.nmax.value_or(60), run);
    if (c == "quarter-n") {
        const std::vector<int> orders = o.n ? std::vector<int>{*o.n} : std::vector<int>{16, 20, 24};
        return check_quarter_n_property(orders, trials, seed, run);
    }
    throw UsageError("unknown claim " + c);
}

int run_verify(Options& o) {
    require_format(o, {"json", "csv"});
    const Verdict v = dispatch(o);
    if (o.format == "csv")
        emit(o, verdict_csv_header() + verdict_csv_row(v, o.timing));
    else
        emit(o, dump(verdict_json(v, o.timing)));
    return exit_code(v.status);
}

int run_search(Options& o) {
    require_format(o, {"json", "graph6"});
    const int n = need(o.n, "--n");
    if (n < 3 || n > 24) throw UsageError("search supports 3 <= n <= 24");
    std::vector<int> forbid = o.forbid;
    if (forbid.empty() && o.k) forbid.push_back(n - *o.k + 1);
    Schedule schedule;
    if (o.t) schedule.t0 = *o.t;
    if (o.steps) schedule.steps = *o.steps;
    const SearchState s =
        search_extremal(n, forbid, parse_objective(o.objective), schedule, o.seed.value_or(0), o.tol);
    if (o.format == "graph6")
        emit(o, to_graph6(s.best) + "\n");
    else
        emit(o, dump(search_json(s)));
    return 0;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--tol", o.tol, "power-iteration tolerance (>= 1e-13)");
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
    cmd->add_option("--format", o.format, "json, csv or graph6");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle and spectral extremal graph toolkit"};
    app.require_subcommand(1);
    Options o;

    CLI::App* gen = app.add_subcommand("gen", "build a family graph, e.g. L:10,2");
    gen->add_option("spec", o.spec, "NAME:params with NAME in L, GammaT, WG, S, S+, T2")->required();
    add_common(gen, o);

    CLI::App* analyze = app.add_subcommand("analyze", "report invariants of graph6 inputs");
    analyze->add_option("graph6", o.inputs, "graphs; read from stdin when absent");
    add_common(analyze, o);

    CLI::App* convert = app.add_subcommand("convert", "convert graphs between graph6 and edge lists");
    convert->add_option("graphs", o.inputs, "inputs; read from stdin when absent");
    convert->add_option("--from", o.from, "graph6 or json");
    convert->add_flag("--canonical", o.canonical, "relabel into canonical form");
    add_common(convert, o);

    CLI::App* verify = app.add_subcommand("verify", "check a claim and report a verdict");
    verify->add_option("claim", o.claim, "claim id")->required();
    verify->add_option("--n", o.n, "order");
    verify->add_option("--k", o.k, "deficiency parameter");
    verify->add_option("--nmax", o.nmax, "largest order");
    verify->add_option("--kmax", o.kmax, "largest k");
    verify->add_option("--trials", o.trials, "random instances");
    verify->add_option("--seed", o.seed, "random seed (default 0)");
    verify->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    verify->add_flag("--exhaustive", o.exhaustive, "enumerate every graph");
    verify->add_flag("--sampled", o.sampled, "seeded random sweep (default)");
    verify->add_flag("--force", o.force, "sweep even when the order bound is unmet");
    verify->add_flag("--timing", o.timing, "record wall-clock seconds");
    add_common(verify, o);

    CLI::App* search = app.add_subcommand("search", "anneal toward a cycle-constrained spectral extremum");
    search->add_option("--n", o.n, "order (3..24)");
    search->add_option("--k", o.k, "forbid C_{n-k+1} when --forbid is absent");
    search->add_option("--forbid", o.forbid, "forbidden cycle lengths");
    search->add_option("--objective", o.objective, "rho or q");
    search->add_option("--seed", o.seed, "random seed (default 0)");
    search->add_option("--t", o.t, "initial temperature");
    search->add_option("--steps", o.steps, "proposals");
    add_common(search, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!(o.tol >= kMinTol)) throw UsageError("--tol must be at least 1e-13");
        if (*gen) return run_gen(o);
        if (*analyze) return run_analyze(o);
        if (*convert) return run_convert(o);
        if (*verify) return run_verify(o);
        if (*search) return run_search(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CycleBudgetExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const SpectralError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    }
    return kExitUsage;
}
