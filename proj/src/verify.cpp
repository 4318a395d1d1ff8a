#include "cyclespec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cyclespec/canonical.hpp"
#include "cyclespec/cycles.hpp"
#include "cyclespec/families.hpp"
#include "cyclespec/graph6.hpp"
#include "cyclespec/sampling.hpp"
#include "cyclespec/transforms.hpp"

namespace cyclespec {

namespace {

constexpr std::size_t kWitnessCap = 100;
constexpr std::uint64_t kExhaustiveCap = 50'000'000;
constexpr int kMaxSweepOrder = 24;

using Clock = std::chrono::steady_clock;

std::string str(std::int64_t v) { return std::to_string(v); }

std::string str(const Rational& r) {
    return r.denominator() == 1 ? str(r.numerator()) : str(r.numerator()) + "/" + str(r.denominator());
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::int64_t ceil_int(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (q * r.denominator() < r.numerator()) ++q;
    return q;
}

Verdict start(std::string claim, std::vector<std::pair<std::string, std::int64_t>> params) {
    Verdict v;
    v.claim = std::move(claim);
    v.params = std::move(params);
    return v;
}

// Moves a tally into the verdict and fixes the status. Witnesses are
// deduplicated up to isomorphism and capped.
void finish(Verdict& v, Tally&& t, Clock::time_point began) {
    v.stats.checked += t.checked;
    v.stats.applicable += t.applicable;
    for (auto& [i, c] : t.counterexamples) v.counterexamples.push_back(std::move(c));
    for (auto& [i, c] : t.undecided) v.undecided.push_back(std::move(c));
    for (const auto& [name, value] : t.counters) v.counters[name] += value;

    std::unordered_set<std::string> seen;
    for (const Witness& w : v.witnesses) seen.insert(canonical_form(from_graph6(w.graph6)) + "|" + w.note);
    std::size_t omitted = 0;
    for (auto& [i, w] : t.witnesses) {
        if (!seen.insert(canonical_form(from_graph6(w.graph6)) + "|" + w.note).second) continue;
        if (v.witnesses.size() >= kWitnessCap) {
            ++omitted;
            continue;
        }
        v.witnesses.push_back(std::move(w));
    }
    if (omitted > 0) v.notes.push_back(str(static_cast<std::int64_t>(omitted)) + " further witnesses omitted");

    if (!v.counterexamples.empty()) v.status = Status::counterexample;
    else if (!v.undecided.empty()) v.status = Status::inconclusive;
    else if (!v.gated.empty() && v.stats.checked == 0) v.status = Status::inconclusive;
    else v.status = Status::verified;
    v.stats.seconds = std::chrono::duration<double>(Clock::now() - began).count();
}

// Records an unmet order bound; returns true when the sweep should be skipped.
bool gate(Verdict& v, bool unmet, const std::string& bound, const RunOptions& opts) {
    if (!unmet) return false;
    v.gated = "hypothesis " + bound + " unmet";
    if (opts.force) {
        v.gated += "; sweep forced";
        return false;
    }
    return true;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

bool has_length(const Graph& g, int l) {
    const CycleAnswer a = has_cycle_of_length(g, l);
    if (a == CycleAnswer::exhausted)
        throw CycleBudgetExhausted("cycle search budget exhausted on " + to_graph6(g) + " at length " + str(l));
    return a == CycleAnswer::yes;
}

// Smallest l in [lo, hi] with no C_l (hi <= n), or 0 when all are present.
int first_missing(const Graph& g, int lo, int hi) {
    for (int l = lo; l <= hi; ++l)
        if (!has_length(g, l)) return l;
    return 0;
}

void add_counterexample(Tally& t, std::uint64_t index, const Graph& g, std::string violated) {
    t.counterexamples.push_back({index, {to_graph6(g), std::move(violated)}});
}

void add_witness(Tally& t, std::uint64_t index, const Graph& g, std::string note) {
    t.witnesses.push_back({index, {to_graph6(g), std::move(note)}});
}

std::string label(const std::string* name) { return name ? " [" + *name + "]" : ""; }

// Erdos-Renyi graph conditioned on at least min_edges edges, by rejection
// at a density drawn between the threshold density and 1.
Graph dense_sample(Rng& rng, int n, std::int64_t min_edges) {
    const int pairs = pair_count(n);
    if (min_edges >= pairs) return named::complete(n);
    const double base = std::max(0.0, static_cast<double>(min_edges) / pairs);
    const double u = uniform_real(rng, 0.0, 1.0);
    const double p = std::min(1.0, base + (1.0 - base) * u * u * 0.5);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = random_gnp(rng, n, p);
        if (g.edge_count() >= min_edges) return g;
    }
    return random_gnm(rng, n, static_cast<int>(min_edges));
}

using InstanceCheck = std::function<void(std::uint64_t, const Graph&, const std::string*, Tally&)>;

// Shared driver for edge-threshold claims: exhaustive over dense labeled
// graphs, or seeded samples plus the perturbed family corpus.
Tally dense_sweep(Verdict& v, int n, std::int64_t min_edges, const SweepMode& mode, const RunOptions& opts,
                  const InstanceCheck& check) {
    const int pairs = pair_count(n);
    min_edges = std::max<std::int64_t>(min_edges, 0);
    if (mode.exhaustive) {
        require(n <= 8, "exhaustive mode supports n <= 8");
        if (min_edges > pairs) {
            v.domain = "exhaustive: no graph on " + str(n) + " vertices reaches " + str(min_edges) + " edges";
            return {};
        }
        const int missing = static_cast<int>(pairs - min_edges);
        const std::uint64_t count = dense_graph_count(n, missing);
        require(count <= kExhaustiveCap, "exhaustive domain of " + std::to_string(count) + " graphs is too large");
        v.domain = "exhaustive: all labeled graphs on " + str(n) + " vertices with e >= " + str(min_edges) +
                   " (" + std::to_string(count) + " graphs)";
        BatchSweep sweep(opts.jobs, [&](std::uint64_t i, const Graph& g, Tally& t) { check(i, g, nullptr, t); });
        for_each_dense_graph(n, missing, [&](const Graph& g) { sweep.push(g); });
        return sweep.finish();
    }

    require(n <= kMaxSweepOrder, "sampled mode supports n <= 24");
    v.stats.seed = mode.seed;
    Tally t = run_indexed(mode.trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng = make_rng(mode.seed, i);
        check(i, dense_sample(rng, n, min_edges), nullptr, acc);
    });
    std::vector<NamedGraph> corpus;
    for (NamedGraph& ng : perturbed_family_corpus(n))
        if (ng.graph.edge_count() >= min_edges) corpus.push_back(std::move(ng));
    Tally injected = run_indexed(corpus.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) {
        check(mode.trials + i, corpus[i].graph, &corpus[i].name, acc);
    });
    t.merge(std::move(injected));
    t.sort();
    v.domain = "sampled: " + std::to_string(mode.trials) + " random graphs on " + str(n) +
               " vertices with e >= " + str(min_edges) + ", seed " + std::to_string(mode.seed) + "; plus " +
               std::to_string(corpus.size()) + " family constructions and one-edge perturbations meeting the bound";
    return t;
}

std::string join_cases(const StabilityClassification& c) {
    std::string out;
    for (StabilityCase s : c.matches) out += (out.empty() ? "" : ",") + std::string(to_string(s));
    return out;
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::counterexample: return "counterexample";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict check_woodall(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("woodall", {{"n", n}, {"k", k}});
    require(k >= 0 && n >= k + 3, "woodall needs k >= 0 and n >= k + 3");
    const Thresholds th = thresholds(n, k);
    const std::int64_t min_edges = ceil_int(th.woodall);
    v.notes.push_back("claim: e >= " + str(th.woodall) + " implies C_l for every l in [3," + str(n - k) + "]");
    if (gate(v, n < 2 * k + 3, "n >= 2k+3", opts)) {
        v.domain = "not swept";
        finish(v, {}, began);
        return v;
    }
    Tally t = dense_sweep(v, n, min_edges, mode, opts,
                          [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
                              ++acc.checked;
                              ++acc.applicable;
                              if (const int l = first_missing(g, 3, n - k))
                                  add_counterexample(acc, i, g, "e = " + str(g.edge_count()) + " but no C_" + str(l) +
                                                                    label(name));
                          });
    if (n >= 2 * k + 3) {
        const Graph sharp = woodall_gamma(n, k);
        if (!has_length(sharp, n - k))
            add_witness(t, ~0ULL, sharp, "sharpness: WG:" + str(n) + "," + str(k) + " has e = threshold - 1 and no C_" +
                                             str(n - k));
        else
            v.notes.push_back("sharpness graph unexpectedly contains C_" + str(n - k));
    }
    finish(v, std::move(t), began);
    return v;
}

Verdict check_refined_woodall(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("refined", {{"n", n}, {"k", k}});
    require(k >= 0 && n >= k + 3, "refined needs k >= 0 and n >= k + 3");
    const Thresholds th = thresholds(n, k);
    v.notes.push_back("claim: e >= " + str(th.refined) +
                      " implies weakly pancyclic with girth 3, and C_l for every l in [3," + str(n - k) +
                      "] unless G = L(" + str(n) + "," + str(k + 1) + ")");
    const int bound = std::max(6 * k + 11, (k + 3) * (k + 4) / 2);
    if (gate(v, n < bound, "n >= max{6k+11, (k+3)(k+4)/2} = " + str(bound), opts)) {
        v.domain = "not swept";
        finish(v, {}, began);
        return v;
    }
    const Graph exception = family_l(n, k + 1);
    Tally t = dense_sweep(v, n, ceil_int(th.refined), mode, opts,
                          [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
                              ++acc.checked;
                              ++acc.applicable;
                              const CycleSpectrum s = cycle_spectrum(g);
                              if (s.acyclic() || !is_weakly_pancyclic(s) || s.girth != 3) {
                                  add_counterexample(acc, i, g, "not weakly pancyclic with girth 3" + label(name));
                                  return;
                              }
                              if (s.contains_range(3, n - k)) return;
                              if (are_isomorphic(g, exception)) {
                                  ++acc.counters["exception L(n,k+1)"];
                                  add_witness(acc, i, g, "exception (b): G = L(" + str(n) + "," + str(k + 1) + ")");
                                  return;
                              }
                              int l = 3;
                              while (s.contains(l)) ++l;
                              add_counterexample(acc, i, g, "no C_" + str(l) + " and G != L(n,k+1)" + label(name));
                          });
    finish(v, std::move(t), began);
    return v;
}

Verdict check_stability(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("stability", {{"n", n}, {"k", k}});
    require(k >= 0 && k + 1 <= kMaxFamilyK && n >= k + 3, "stability needs 0 <= k <= 11 and n >= k + 3");
    const Thresholds th = thresholds(n, k);
    v.notes.push_back("claim: e >= " + str(th.stability) +
                      " implies weakly pancyclic with girth 3; without C_" + str(n - k) +
                      " one of cases (a)-(d) holds");
    const int bound = std::max(6 * k + 17, (k + 4) * (k + 5) / 2);
    if (gate(v, n < bound, "n >= max{6k+17, (k+4)(k+5)/2} = " + str(bound), opts)) {
        v.domain = "not swept";
        finish(v, {}, began);
        return v;
    }
    Tally t = dense_sweep(v, n, ceil_int(th.stability), mode, opts,
                          [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
                              ++acc.checked;
                              const CycleSpectrum s = cycle_spectrum(g);
                              if (s.acyclic() || !is_weakly_pancyclic(s) || s.girth != 3)
                                  add_counterexample(acc, i, g, "not weakly pancyclic with girth 3" + label(name));
                              if (s.contains(n - k)) return;
                              ++acc.applicable;
                              const StabilityClassification c = classify_stability(g, k);
                              if (c.none()) {
                                  add_counterexample(acc, i, g,
                                                     "no C_" + str(n - k) + " and none of cases (a)-(d)" + label(name));
                                  return;
                              }
                              ++acc.counters["case " + std::string(to_string(*c.first()))];
                              add_witness(acc, i, g, "no C_" + str(n - k) + "; cases " + join_cases(c) + label(name));
                          });
    finish(v, std::move(t), began);
    return v;
}

Verdict check_spectral_theorem(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("spectral", {{"n", n}, {"k", k}});
    require(k >= 1 && n >= k + 2, "spectral needs k >= 1 and n >= k + 2");
    require(!mode.exhaustive || n <= 8, "exhaustive mode supports n <= 8");
    v.notes.push_back("claim: rho(G) >= rho(L(n,k)) (part a) or q(G) >= q(L(n,k)) (part b) implies C_l for every l in [3," +
                      str(n - k + 1) + "] unless G = L(n,k)");
    const int bound_a = std::max(6 * k + 11, (k + 3) * (k + 4) / 2);
    const int bound_b = std::max(6 * k + 11, k * k + 2 * k + 3);
    bool run_a = true, run_b = true;
    if (n < bound_a || n < bound_b) {
        std::string unmet;
        if (n < bound_a) unmet += "part (a) n >= " + str(bound_a);
        if (n < bound_b) unmet += std::string(unmet.empty() ? "" : ", ") + "part (b) n >= " + str(bound_b);
        v.gated = "hypothesis " + unmet + " unmet";
        if (opts.force) {
            v.gated += "; sweep forced";
        } else {
            run_a = n >= bound_a;
            run_b = n >= bound_b;
        }
    }
    if (!run_a && !run_b) {
        v.domain = "not swept";
        finish(v, {}, began);
        return v;
    }
    const Graph l = family_l(n, k);
    const double rho_l = spectral_radius(l, opts.tol);
    const double q_l = q_radius(l, opts.tol);
    v.notes.push_back("rho(L(n,k)) = " + fmt(rho_l) + ", q(L(n,k)) = " + fmt(q_l));

    auto check = [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
        ++acc.checked;
        const double rho = spectral_radius(g, opts.tol);
        const double q = q_radius(g, opts.tol);
        const bool hit_a = run_a && rho >= rho_l - kSpectralMargin;
        const bool hit_b = run_b && q >= q_l - kSpectralMargin;
        if (!hit_a && !hit_b) return;
        ++acc.applicable;
        const int missing = first_missing(g, 3, n - k + 1);
        if (missing == 0) return;
        if (are_isomorphic(g, l)) {
            ++acc.counters["exception L(n,k)"];
            add_witness(acc, i, g, "exception: G = L(" + str(n) + "," + str(k) + ")");
            return;
        }
        const bool clear_a = hit_a && rho >= rho_l + kSpectralMargin;
        const bool clear_b = hit_b && q >= q_l + kSpectralMargin;
        std::string what = "no C_" + str(missing) + " with rho = " + fmt(rho) + ", q = " + fmt(q) + label(name);
        if (clear_a || clear_b) add_counterexample(acc, i, g, what);
        else acc.undecided.push_back({i, {to_graph6(g), "radius within 1e-9 of L(n,k): " + what}});
    };

    const int pairs = pair_count(n);
    Tally t;
    if (mode.exhaustive) {
        const int missing = static_cast<int>(pairs - family_l_edges(n, k)) + n;
        const std::uint64_t count = dense_graph_count(n, std::min(missing, pairs));
        require(count <= kExhaustiveCap, "exhaustive domain too large");
        v.domain = "exhaustive: all labeled graphs on " + str(n) + " vertices missing at most " +
                   str(std::min(missing, pairs)) + " edges (" + std::to_string(count) + " graphs)";
        BatchSweep sweep(opts.jobs, [&](std::uint64_t i, const Graph& g, Tally& acc) { check(i, g, nullptr, acc); });
        for_each_dense_graph(n, std::min(missing, pairs), [&](const Graph& g) { sweep.push(g); });
        t = sweep.finish();
    } else {
        require(n <= kMaxSweepOrder, "sampled mode supports n <= 24");
        v.stats.seed = mode.seed;
        // K_n minus a few random edges; radii near rho(L(n,k)) need nearly
        // all of the edges present
        const int span = static_cast<int>(pairs - family_l_edges(n, k)) + n;
        t = run_indexed(mode.trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
            Rng rng = make_rng(mode.seed, i);
            const int drop = uniform_int(rng, 0, std::min(span, pairs));
            check(i, random_gnm(rng, n, pairs - drop), nullptr, acc);
        });
        const std::vector<NamedGraph> corpus = perturbed_family_corpus(n);
        Tally injected = run_indexed(corpus.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) {
            check(mode.trials + i, corpus[i].graph, &corpus[i].name, acc);
        });
        t.merge(std::move(injected));
        t.sort();
        v.domain = "sampled: " + std::to_string(mode.trials) + " graphs K_" + str(n) + " minus up to " +
                   str(std::min(span, pairs)) + " random edges, seed " + std::to_string(mode.seed) + "; plus " +
                   std::to_string(corpus.size()) + " family constructions and one-edge perturbations";
    }
    finish(v, std::move(t), began);
    return v;
}

Verdict check_even_cycle_bound(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("even-cycle", {{"n", n}, {"k", k}});
    require(k >= 1 && n >= 1, "even-cycle needs k >= 1 and n >= 1");
    const Rational bound(static_cast<std::int64_t>(2 * k + 1) * (n - 1), 2);
    v.notes.push_back("claim: no even cycle longer than " + str(2 * k) + " implies e <= " + str(bound));

    // even-cycle-free above 2k is hereditary, so the class is closed under
    // vertex deletion
    auto no_long_even = [&](const Graph& g) {
        for (int l = 2 * k + 2; l <= g.order(); l += 2)
            if (has_length(g, l)) return false;
        return true;
    };
    auto check = [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
        ++acc.checked;
        if (!no_long_even(g)) return;
        ++acc.applicable;
        const std::int64_t e = g.edge_count();
        if (Rational(e) > bound) {
            add_counterexample(acc, i, g, "ec <= " + str(2 * k) + " but e = " + str(e) + label(name));
            return;
        }
        // keep only this worker's current maximum as attainer candidates
        if (!acc.witnesses.empty()) {
            const std::int64_t best = from_graph6(acc.witnesses.front().second.graph6).edge_count();
            if (e < best) return;
            if (e > best) acc.witnesses.clear();
        }
        add_witness(acc, i, g, "extremal: e = " + str(e));
    };

    Tally t;
    if (mode.exhaustive) {
        require(n <= 9, "exhaustive mode supports n <= 9");
        if (n <= 7) {
            v.domain = "exhaustive: all " + std::to_string(std::uint64_t{1} << pair_count(n)) +
                       " labeled graphs on " + str(n) + " vertices";
            BatchSweep sweep(opts.jobs, [&](std::uint64_t i, const Graph& g, Tally& acc) { check(i, g, nullptr, acc); });
            for_each_labeled_graph(n, [&](const Graph& g) { sweep.push(g); });
            t = sweep.finish();
        } else {
            const std::vector<Graph> classes = nonisomorphic_graphs(n, no_long_even);
            v.domain = "exhaustive: all " + std::to_string(classes.size()) +
                       " isomorphism classes on " + str(n) + " vertices without even cycles longer than " + str(2 * k);
            t = run_indexed(classes.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) { check(i, classes[i], nullptr, acc); });
        }
    } else {
        require(n <= kMaxSweepOrder, "sampled mode supports n <= 24");
        v.stats.seed = mode.seed;
        const int pairs = pair_count(n);
        const std::int64_t floor_bound = bound.numerator() / bound.denominator();
        t = run_indexed(mode.trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
            Rng rng = make_rng(mode.seed, i);
            const int m = uniform_int(rng, 0, static_cast<int>(std::min<std::int64_t>(pairs, floor_bound + 2)));
            check(i, random_gnm(rng, n, m), nullptr, acc);
        });
        // chains of (2k+1)-cliques sharing cut vertices attain the bound
        std::vector<NamedGraph> corpus = perturbed_family_corpus(n);
        Graph chain(1);
        int blocks = 0;
        while (chain.order() < n) {
            const int add = std::min(2 * k, n - chain.order());
            const int attach = chain.order() - 1;
            chain = disjoint_union(chain, named::complete(add));
            for (int a = attach + 1; a < chain.order(); ++a) chain.add_edge(attach, a);
            ++blocks;
        }
        corpus.push_back({"clique chain of " + str(blocks) + " blocks", chain});
        Tally injected = run_indexed(corpus.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) {
            check(mode.trials + i, corpus[i].graph, &corpus[i].name, acc);
        });
        t.merge(std::move(injected));
        t.sort();
        v.domain = "sampled: " + std::to_string(mode.trials) + " random graphs on " + str(n) + " vertices with e <= " +
                   str(std::min<std::int64_t>(pairs, floor_bound + 2)) + ", seed " + std::to_string(mode.seed) +
                   "; plus " + std::to_string(corpus.size()) + " constructions";
    }
    // attainers: the global maximum over all workers
    std::int64_t best = -1;
    for (const auto& [i, w] : t.witnesses) best = std::max<std::int64_t>(best, from_graph6(w.graph6).edge_count());
    std::erase_if(t.witnesses, [&](const auto& w) { return from_graph6(w.second.graph6).edge_count() != best; });
    if (best >= 0) v.counters["max edges"] = static_cast<std::uint64_t>(best);
    finish(v, std::move(t), began);
    return v;
}

Verdict check_closure_clique(int n, int k, const SweepMode& mode, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("closure-clique", {{"n", n}, {"k", k}});
    require(k >= 0 && n >= k + 2, "closure-clique needs k >= 0 and n >= k + 2");
    const std::int64_t bound = binomial2(n - k - 1) + static_cast<std::int64_t>(k + 1) * (k + 1);
    v.notes.push_back("claim: G = cl_n(G) and e > " + str(bound) + " imply omega >= " + str(n - k));
    if (gate(v, n < 6 * k + 5, "n >= 6k+5 = " + str(6 * k + 5), opts)) {
        v.domain = "not swept";
        finish(v, {}, began);
        return v;
    }
    // closure only adds edges, so closing a graph above the bound stays above it
    Tally t = dense_sweep(v, n, bound + 1, mode, opts,
                          [&](std::uint64_t i, const Graph& g, const std::string* name, Tally& acc) {
                              ++acc.checked;
                              const Graph closed = closure(g, n).graph;
                              if (mode.exhaustive && !(closed == g)) return;
                              ++acc.applicable;
                              if (clique_number(closed) < n - k)
                                  add_counterexample(acc, i, closed,
                                                     "closed with e = " + str(closed.edge_count()) +
                                                         " but omega = " + str(clique_number(closed)) + label(name));
                          });
    if (!mode.exhaustive) v.notes.push_back("sampled graphs are replaced by their n-closure before checking");
    finish(v, std::move(t), began);
    return v;
}

namespace {

// Random graph for property sweeps: order in [n_lo, n_max], density uniform.
Graph property_sample(Rng& rng, int n_lo, int n_max) {
    const int n = uniform_int(rng, n_lo, n_max);
    return random_gnp(rng, n, uniform_real(rng, 0.05, 0.95));
}

void require_trials(std::uint64_t trials, int n_max) {
    require(trials >= 1, "trials must be at least 1");
    require(n_max >= 2 && n_max <= kMaxOrder, "n_max must be in [2, 128]");
}

std::string property_domain(std::uint64_t trials, std::uint64_t seed, int n_lo, int n_max) {
    return "sampled: " + std::to_string(trials) + " random graphs G(n,p), n uniform in [" + str(n_lo) + "," +
           str(n_max) + "], p uniform in [0.05,0.95], seed " + std::to_string(seed);
}

}  // namespace

Verdict check_kelmans_monotone(std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("kelmans", {{"trials", static_cast<std::int64_t>(trials)}, {"nmax", n_max}});
    require_trials(trials, n_max);
    v.notes.push_back("claim: rho(G[u->v]) >= rho(G) and q(G[u->v]) >= q(G); the operation keeps n and e");
    v.stats.seed = seed;
    v.domain = property_domain(trials, seed, 2, n_max) + "; u != v uniform";
    Tally t = run_indexed(trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng = make_rng(seed, i);
        const Graph g = property_sample(rng, 2, n_max);
        const int n = g.order();
        const int u = uniform_int(rng, 0, n - 1);
        int w = uniform_int(rng, 0, n - 2);
        if (w >= u) ++w;
        const Graph h = kelmans(g, u, w);
        ++acc.checked;
        ++acc.applicable;
        const std::string where = " for u = " + str(u) + ", v = " + str(w);
        if (h.order() != n || h.edge_count() != g.edge_count())
            add_counterexample(acc, i, g, "order or size changed" + where);
        const double rg = spectral_radius(g, opts.tol), rh = spectral_radius(h, opts.tol);
        if (rh < rg - kSpectralMargin)
            add_counterexample(acc, i, g, "rho fell from " + fmt(rg) + " to " + fmt(rh) + where);
        const double qg = q_radius(g, opts.tol), qh = q_radius(h, opts.tol);
        if (qh < qg - kSpectralMargin)
            add_counterexample(acc, i, g, "q fell from " + fmt(qg) + " to " + fmt(qh) + where);
    });
    finish(v, std::move(t), began);
    return v;
}

namespace {

// Hong and Das sweeps share shape: random instances plus the equality cases.
Verdict bound_sweep(std::string claim, std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts,
                    bool hong) {
    const auto began = Clock::now();
    Verdict v = start(std::move(claim), {{"trials", static_cast<std::int64_t>(trials)}, {"nmax", n_max}});
    require_trials(trials, n_max);
    v.stats.seed = seed;
    v.notes.push_back(hong ? "claim: min degree >= 1 implies rho <= sqrt(2m - n + 1)"
                           : "claim: n >= 2 implies q <= 2m/(n-1) + n - 2");
    auto check = [&](std::uint64_t i, const Graph& g, Tally& acc) {
        ++acc.checked;
        double value, limit;
        if (hong) {
            const HongBound hb = hong_bound(g);
            if (!hb.valid) return;
            value = spectral_radius(g, opts.tol);
            limit = hb.value;
        } else {
            value = q_radius(g, opts.tol);
            limit = das_bound(g);
        }
        ++acc.applicable;
        if (value > limit + kSpectralMargin)
            add_counterexample(acc, i, g, std::string(hong ? "rho" : "q") + " = " + fmt(value) + " exceeds bound " +
                                              fmt(limit));
        else if (value > limit - kSpectralMargin)
            add_witness(acc, i, g, "equality: " + std::string(hong ? "rho" : "q") + " = bound = " + fmt(limit));
    };
    Tally t = run_indexed(trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng = make_rng(seed, i);
        Graph g = property_sample(rng, 2, n_max);
        for (int attempt = 0; hong && min_degree(g) < 1 && attempt < 100; ++attempt) g = property_sample(rng, 2, n_max);
        check(i, g, acc);
    });
    // complete graphs and stars are the equality cases
    std::vector<Graph> extra;
    for (int n = 2; n <= n_max; ++n) {
        extra.push_back(named::complete(n));
        if (n >= 3) extra.push_back(named::star(n - 1));
    }
    Tally injected = run_indexed(extra.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) { check(trials + i, extra[i], acc); });
    t.merge(std::move(injected));
    t.sort();
    v.domain = property_domain(trials, seed, 2, n_max) + (hong ? " conditioned on min degree >= 1" : "") +
               "; plus complete graphs and stars on 2.." + str(n_max) + " vertices";
    finish(v, std::move(t), began);
    return v;
}

}  // namespace

Verdict check_hong_bound(std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts) {
    return bound_sweep("hong", trials, seed, n_max, opts, true);
}

Verdict check_das_bound(std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts) {
    return bound_sweep("das", trials, seed, n_max, opts, false);
}

Verdict check_sun_das(std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("sun-das", {{"trials", static_cast<std::int64_t>(trials)}, {"nmax", n_max}});
    require_trials(trials, n_max);
    v.stats.seed = seed;
    v.notes.push_back("claim: for every vertex v, rho^2(G-v) >= rho^2(G) - 2d(v) + 1 when min degree >= 1, and "
                      "rho^2(G) <= rho^2(G-v) + 2d(v) always");
    auto check = [&](std::uint64_t i, const Graph& g, Tally& acc) {
        ++acc.checked;
        for (int x = 0; x < g.order(); ++x) {
            const VertexDeletionSides s = sun_das_check(g, x, opts.tol);
            ++acc.applicable;
            const std::string at = " at v = " + str(x);
            if (s.deletion_applies) {
                if (s.deletion_lhs < s.deletion_rhs - kSpectralMargin)
                    add_counterexample(acc, i, g, "rho^2(G-v) = " + fmt(s.deletion_lhs) + " < " + fmt(s.deletion_rhs) + at);
                else if (s.deletion_lhs < s.deletion_rhs + kSpectralMargin)
                    add_witness(acc, i, g, "deletion equality: lhs = rhs = " + fmt(s.deletion_rhs));
            }
            if (s.growth_lhs > s.growth_rhs + kSpectralMargin)
                add_counterexample(acc, i, g, "rho^2(G) = " + fmt(s.growth_lhs) + " > " + fmt(s.growth_rhs) + at);
        }
    };
    Tally t = run_indexed(trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng = make_rng(seed, i);
        check(i, property_sample(rng, 2, n_max), acc);
    });
    const std::vector<Graph> extra = {named::complete(2), named::complete(3), named::cycle(4), named::path(3),
                                      named::star(3), named::petersen()};
    Tally injected = run_indexed(extra.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) { check(trials + i, extra[i], acc); });
    t.merge(std::move(injected));
    t.sort();
    v.domain = property_domain(trials, seed, 2, n_max) + ", every vertex; plus K_2, K_3, C_4, P_3, K_{1,3}, Petersen";
    finish(v, std::move(t), began);
    return v;
}

Verdict check_bondy_pancyclic(std::uint64_t trials, std::uint64_t seed, int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("bondy", {{"trials", static_cast<std::int64_t>(trials)}, {"nmax", n_max}});
    require_trials(trials, n_max);
    require(n_max <= kMaxSweepOrder, "bondy supports n_max <= 24");
    v.stats.seed = seed;
    v.notes.push_back("claim: a graph with a cycle, circumference c and e > c(2n-c)/4 is weakly pancyclic with girth 3");
    v.domain = property_domain(trials, seed, 3, n_max);
    Tally t = run_indexed(trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
        Rng rng = make_rng(seed, i);
        const Graph g = property_sample(rng, 3, n_max);
        ++acc.checked;
        const CycleSpectrum s = cycle_spectrum(g);
        const std::int64_t n = g.order(), c = s.circumference, e = g.edge_count();
        if (s.acyclic() || 4 * e <= c * (2 * n - c)) return;
        ++acc.applicable;
        if (!is_weakly_pancyclic(s) || s.girth != 3)
            add_counterexample(acc, i, g, "e = " + str(e) + " > c(2n-c)/4 with c = " + str(c) +
                                              " but not weakly pancyclic with girth 3");
    });
    finish(v, std::move(t), began);
    return v;
}

namespace {

// Runs `check` over every labeled graph for orders up to 7 and over the
// isomorphism classes at order 8.
Tally small_order_sweep(int n_max, const RunOptions& opts,
                        const std::function<void(std::uint64_t, const Graph&, Tally&)>& check) {
    Tally total;
    std::uint64_t base = 0;
    for (int n = 3; n <= n_max; ++n) {
        if (n <= 7) {
            BatchSweep sweep(opts.jobs, [&](std::uint64_t i, const Graph& g, Tally& acc) { check(base + i, g, acc); });
            for_each_labeled_graph(n, [&](const Graph& g) { sweep.push(g); });
            Tally t = sweep.finish();
            const std::uint64_t count = std::uint64_t{1} << pair_count(n);
            total.merge(std::move(t));
            base += count;
        } else {
            const std::vector<Graph> classes = nonisomorphic_graphs(n, [](const Graph&) { return true; });
            Tally t = run_indexed(classes.size(), opts.jobs,
                                  [&](std::uint64_t i, Tally& acc) { check(base + i, classes[i], acc); });
            total.merge(std::move(t));
            base += classes.size();
        }
    }
    total.sort();
    return total;
}

}  // namespace

Verdict check_closure_circumference(int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("closure", {{"nmax", n_max}});
    require(n_max >= 3 && n_max <= 8, "closure supports 3 <= n_max <= 8");
    v.notes.push_back("claim: c(G) = c(cl_n(G))");
    v.domain = "exhaustive: all labeled graphs on 3.." + str(std::min(n_max, 7)) + " vertices" +
               (n_max == 8 ? "; all isomorphism classes on 8 vertices" : "");
    Tally t = small_order_sweep(n_max, opts, [&](std::uint64_t i, const Graph& g, Tally& acc) {
        ++acc.checked;
        const ClosureResult r = closure(g, g.order());
        if (r.added.empty()) return;
        ++acc.applicable;
        const int before = circumference(g), after = circumference(r.graph);
        if (before != after)
            add_counterexample(acc, i, g, "c(G) = " + str(before) + " but c(cl_n(G)) = " + str(after));
    });
    v.counters["closure added edges"] = t.applicable;
    finish(v, std::move(t), began);
    return v;
}

Verdict check_ore(int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("ore", {{"nmax", n_max}});
    require(n_max >= 3 && n_max <= 8, "ore supports 3 <= n_max <= 8");
    v.notes.push_back("claim: a non-hamiltonian graph has e <= C(n-1,2) + 1");
    // every graph above the bound must be hamiltonian; graphs exactly at it
    // are swept too so the attainers get logged
    Tally total;
    std::uint64_t base = 0, swept = 0;
    for (int n = 3; n <= n_max; ++n) {
        const std::int64_t bound = binomial2(n - 1) + 1;
        const int missing = static_cast<int>(pair_count(n) - bound);
        BatchSweep sweep(opts.jobs, [&](std::uint64_t i, const Graph& g, Tally& acc) {
            ++acc.checked;
            if (is_hamiltonian(g)) return;
            ++acc.applicable;
            if (g.edge_count() > bound)
                add_counterexample(acc, base + i, g, "non-hamiltonian with e = " + str(g.edge_count()));
            else
                add_witness(acc, base + i, g, "extremal: non-hamiltonian on " + str(n) + " vertices with e = " + str(bound));
        });
        for_each_dense_graph(n, missing, [&](const Graph& g) { sweep.push(g); });
        base += dense_graph_count(n, missing);
        swept += dense_graph_count(n, missing);
        total.merge(sweep.finish());
    }
    total.sort();
    v.domain = "exhaustive: all labeled graphs on 3.." + str(n_max) + " vertices with e >= C(n-1,2) + 1 (" +
               std::to_string(swept) + " graphs)";
    finish(v, std::move(total), began);
    return v;
}

namespace {

// Maximal members of F_{n,k} up to isomorphism: an (n-k)-clique with the
// remaining k vertices split into cliques, each joined to one anchor.
// Enumerated as integer partitions of k grouped by shared anchor.
std::vector<std::vector<std::vector<int>>> member_shapes(int k) {
    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    std::function<void(int, int)> split = [&](int left, int largest) {
        if (left == 0) {
            partitions.push_back(current);
            return;
        }
        for (int p = std::min(left, largest); p >= 1; --p) {
            current.push_back(p);
            split(left - p, p);
            current.pop_back();
        }
    };
    split(k, k);

    std::set<std::vector<std::vector<int>>> shapes;
    for (const auto& parts : partitions) {
        std::vector<int> group(parts.size(), 0);
        std::function<void(std::size_t, int)> assign = [&](std::size_t i, int groups) {
            if (i == parts.size()) {
                std::vector<std::vector<int>> shape(static_cast<std::size_t>(groups));
                for (std::size_t j = 0; j < parts.size(); ++j) shape[group[j]].push_back(parts[j]);
                for (auto& s : shape) std::sort(s.rbegin(), s.rend());
                std::sort(shape.rbegin(), shape.rend());
                shapes.insert(shape);
                return;
            }
            for (int gi = 0; gi <= groups; ++gi) {
                group[i] = gi;
                assign(i + 1, std::max(groups, gi + 1));
            }
        };
        assign(0, 0);
    }
    return {shapes.begin(), shapes.end()};
}

Graph build_member(int n, int k, const std::vector<std::vector<int>>& shape) {
    Graph g = disjoint_union(named::complete(n - k), Graph(k));
    int next = n - k;
    for (std::size_t anchor = 0; anchor < shape.size(); ++anchor) {
        for (int size : shape[anchor]) {
            for (int a = next; a < next + size; ++a) {
                g.add_edge(static_cast<int>(anchor), a);
                for (int b = a + 1; b < next + size; ++b) g.add_edge(a, b);
            }
            next += size;
        }
    }
    return g;
}

}  // namespace

Verdict check_family_comparisons(int k_max, int n_max, const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("family-cmp", {{"kmax", k_max}, {"nmax", n_max}});
    require(k_max >= 1 && n_max >= 6 && n_max <= kMaxOrder, "family-cmp needs k_max >= 1 and 6 <= n_max <= 128");
    const int k_members = std::min(k_max, 6);
    const int n_members = std::min(n_max, 40);
    v.notes.push_back("claims: rho and q of L(n,k) exceed those of L(n,k+1) for n >= 2k+4; of L(n,1) exceed "
                      "gamma_t(n,2) for n >= 6; of L(n,2) exceed gamma_t(n,3) for n >= 6; among maximal members of "
                      "F_{n,k} with n >= 2k+1 only L(n,k) reaches rho(L(n,k)) and q(L(n,k))");
    v.domain = "L-chain 1 <= k <= " + str(k_max) + ", 2k+4 <= n <= " + str(n_max) + "; gamma comparisons 6 <= n <= " +
               str(n_max) + "; maximal family members k <= " + str(k_members) + ", 2k+1 <= n <= " + str(n_members);

    struct Comparison {
        std::string what;
        Graph larger, smaller;
    };
    std::vector<Comparison> items;
    for (int k = 1; k <= k_max; ++k)
        for (int n = 2 * k + 4; n <= n_max; ++n)
            items.push_back({"L(" + str(n) + "," + str(k) + ") > L(" + str(n) + "," + str(k + 1) + ")", family_l(n, k),
                             family_l(n, k + 1)});
    for (int n = 6; n <= n_max; ++n) {
        items.push_back({"L(" + str(n) + ",1) > gamma_t(" + str(n) + ",2)", family_l(n, 1), gamma_t(n, 2)});
        items.push_back({"L(" + str(n) + ",2) > gamma_t(" + str(n) + ",3)", family_l(n, 2), gamma_t(n, 3)});
    }
    for (int k = 1; k <= k_members; ++k) {
        const auto shapes = member_shapes(k);
        for (int n = std::max(2 * k + 1, k + 2); n <= n_members; ++n) {
            const Graph l = family_l(n, k);
            for (const auto& shape : shapes) {
                if (static_cast<int>(shape.size()) > n - k) continue;
                Graph m = build_member(n, k, shape);
                if (are_isomorphic(m, l)) continue;
                std::string desc;
                for (const auto& group : shape) {
                    desc += desc.empty() ? "" : "|";
                    for (std::size_t j = 0; j < group.size(); ++j) desc += (j ? "+" : "") + str(group[j]);
                }
                items.push_back({"L(" + str(n) + "," + str(k) + ") > member [" + desc + "]", l, std::move(m)});
            }
        }
    }

    Tally t = run_indexed(items.size(), opts.jobs, [&](std::uint64_t i, Tally& acc) {
        const Comparison& c = items[i];
        ++acc.checked;
        ++acc.applicable;
        const double gaps[2] = {spectral_radius(c.larger, opts.tol) - spectral_radius(c.smaller, opts.tol),
                                q_radius(c.larger, opts.tol) - q_radius(c.smaller, opts.tol)};
        for (int which = 0; which < 2; ++which) {
            const std::string what = std::string(which ? "q: " : "rho: ") + c.what + ", gap " + fmt(gaps[which]);
            if (gaps[which] < -kSpectralMargin) add_counterexample(acc, i, c.smaller, what);
            else if (gaps[which] <= kSpectralMargin) acc.undecided.push_back({i, {to_graph6(c.smaller), what}});
        }
    });
    finish(v, std::move(t), began);
    return v;
}

bool quarter_n_applicable(const Graph& g, double tol) {
    const int n = g.order();
    return spectral_radius(g, tol) > std::sqrt(static_cast<double>(n * n / 4)) + kSpectralMargin;
}

Verdict check_quarter_n_property(const std::vector<int>& orders, std::uint64_t trials, std::uint64_t seed,
                                 const RunOptions& opts) {
    const auto began = Clock::now();
    Verdict v = start("quarter-n", {{"trials", static_cast<std::int64_t>(trials)}});
    require(!orders.empty() && trials >= 1, "quarter-n needs at least one order and one trial");
    for (int n : orders) require(n >= 4 && n <= kMaxSweepOrder, "quarter-n supports 4 <= n <= 24");
    v.stats.seed = seed;
    v.notes.push_back("property sweep at desk scale: rho(G) > sqrt(floor(n^2/4)) implies C_l for every l in "
                      "[3, ceil(n/4)]; not a reproduction of the asymptotic statement");
    std::string list;
    for (int n : orders) list += (list.empty() ? "" : ",") + str(n);
    v.domain = "sampled: per order n in {" + list + "}, " + std::to_string(trials) +
               " graphs with rho > sqrt(floor(n^2/4)) drawn from G(n,p), p in [0.45,0.75], and from "
               "K_{ceil(n/2),floor(n/2)} with random edges added inside and removed across, seed " +
               std::to_string(seed) + "; plus K_n and turan2(n) + one edge";
    Tally total;
    for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        const int n = orders[oi];
        const double limit = std::sqrt(static_cast<double>(n * n / 4));
        const int top = (n + 3) / 4;
        auto check = [&](std::uint64_t i, const Graph& g, Tally& acc) {
            ++acc.checked;
            ++acc.applicable;
            if (const int l = first_missing(g, 3, top))
                add_counterexample(acc, i, g, "rho = " + fmt(spectral_radius(g, opts.tol)) + " > " + fmt(limit) +
                                                  " but no C_" + str(l));
        };
        const std::uint64_t base = oi * (trials + 2);
        Tally t = run_indexed(trials, opts.jobs, [&](std::uint64_t i, Tally& acc) {
            Rng rng = make_rng(seed, (static_cast<std::uint64_t>(n) << 32) | i);
            for (int attempt = 0; attempt < 1000; ++attempt) {
                Graph g;
                if (uniform_int(rng, 0, 1) == 0) {
                    g = random_gnp(rng, n, uniform_real(rng, 0.45, 0.75));
                } else {
                    g = turan2(n);
                    const int a = (n + 1) / 2;
                    const int add = uniform_int(rng, 1, std::max(1, n / 2));
                    const int drop = uniform_int(rng, 0, n);
                    for (int j = 0; j < add; ++j) {
                        const bool left = uniform_int(rng, 0, 1) == 0;
                        const int lo = left ? 0 : a, hi = left ? a - 1 : n - 1;
                        if (hi - lo < 1) continue;
                        const int x = uniform_int(rng, lo, hi);
                        int y = uniform_int(rng, lo, hi - 1);
                        if (y >= x) ++y;
                        g.add_edge(x, y);
                    }
                    for (int j = 0; j < drop; ++j) g.remove_edge(uniform_int(rng, 0, a - 1), uniform_int(rng, a, n - 1));
                }
                if (quarter_n_applicable(g, opts.tol)) {
                    check(base + i, g, acc);
                    return;
                }
            }
            ++acc.counters["draws without an applicable graph"];
        });
        Graph plus = turan2(n);
        plus.add_edge(0, 1);
        check(base + trials, plus, t);
        check(base + trials + 1, named::complete(n), t);
        total.merge(std::move(t));
    }
    total.sort();
    finish(v, std::move(total), began);
    return v;
}

}  // namespace cyclespec
