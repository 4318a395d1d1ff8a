#include "cyclespec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "cyclespec/canonical.hpp"
#include "cyclespec/families.hpp"

namespace cyclespec {

namespace {

template <class Entries>
void sort_by_index(Entries& entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
}

template <class Entries>
void append(Entries& to, Entries& from) {
    to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

}  // namespace

void Tally::merge(Tally&& other) {
    checked += other.checked;
    applicable += other.applicable;
    append(counterexamples, other.counterexamples);
    append(witnesses, other.witnesses);
    append(undecided, other.undecided);
    for (const auto& [name, value] : other.counters) counters[name] += value;
}

void Tally::sort() {
    sort_by_index(counterexamples);
    sort_by_index(witnesses);
    sort_by_index(undecided);
}

int default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

Tally run_indexed(std::uint64_t count, int jobs,
                  const std::function<void(std::uint64_t, Tally&)>& body) {
    if (jobs < 1) jobs = default_jobs();
    if (count == 0) return {};
    if (jobs == 1 || count == 1) {
        Tally t;
        for (std::uint64_t i = 0; i < count; ++i) body(i, t);
        t.sort();
        return t;
    }

    const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (static_cast<std::uint64_t>(jobs) * 16));
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<Tally> tallies(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::uint64_t lo = next.fetch_add(chunk);
                    if (lo >= count || failed.load()) return;
                    const std::uint64_t hi = std::min(count, lo + chunk);
                    for (std::uint64_t i = lo; i < hi; ++i) body(i, tallies[w]);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);

    Tally total;
    for (auto& t : tallies) total.merge(std::move(t));
    total.sort();
    return total;
}

BatchSweep::BatchSweep(int jobs, Check check, std::size_t batch)
    : jobs_(jobs), check_(std::move(check)), batch_(batch) {
    pending_.reserve(batch_);
}

void BatchSweep::push(Graph g) {
    pending_.push_back(std::move(g));
    if (pending_.size() >= batch_) flush();
}

void BatchSweep::flush() {
    const std::uint64_t base = next_index_;
    Tally t = run_indexed(pending_.size(), jobs_, [&](std::uint64_t i, Tally& acc) {
        check_(base + i, pending_[i], acc);
    });
    next_index_ += pending_.size();
    pending_.clear();
    total_.merge(std::move(t));
}

Tally BatchSweep::finish() {
    if (!pending_.empty()) flush();
    total_.sort();
    return std::move(total_);
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 8) throw GraphError("labeled enumeration supports 1 <= n <= 8");
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_pair_mask(n, mask));
}

std::uint64_t dense_graph_count(int n, int max_missing) {
    const int pairs = pair_count(n);
    std::uint64_t total = 0, term = 1;  // term = C(pairs, r)
    for (int r = 0; r <= std::min(max_missing, pairs); ++r) {
        total += term;
        term = term * static_cast<std::uint64_t>(pairs - r) / static_cast<std::uint64_t>(r + 1);
    }
    return total;
}

void for_each_dense_graph(int n, int max_missing, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kMaxOrder) throw GraphError("order out of range");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int total = static_cast<int>(pairs.size());
    const Graph full = named::complete(n);
    for (int r = 0; r <= std::min(max_missing, total); ++r) {
        std::vector<int> pick(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) pick[i] = i;
        for (;;) {
            Graph g = full;
            for (int i : pick) g.remove_edge(pairs[i].u, pairs[i].v);
            fn(g);
            int i = r - 1;
            while (i >= 0 && pick[i] == total - r + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

std::vector<Graph> nonisomorphic_graphs(int n, const std::function<bool(const Graph&)>& keep) {
    if (n < 1 || n > 10) throw GraphError("isomorphism-class enumeration supports 1 <= n <= 10");
    std::vector<Graph> level{Graph(1)};
    if (!keep(level.front())) return {};
    for (int order = 2; order <= n; ++order) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const Graph& base : level) {
            for (std::uint32_t mask = 0; mask < (1U << (order - 1)); ++mask) {
                Graph g = disjoint_union(base, Graph(1));
                for (int v = 0; v < order - 1; ++v)
                    if (mask >> v & 1) g.add_edge(v, order - 1);
                if (!keep(g)) continue;
                std::string form = canonical_form(g);
                if (seen.insert(form).second) next.emplace_back(std::move(form), std::move(g));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [form, g] : next) level.push_back(std::move(g));
    }
    return level;
}

std::vector<NamedGraph> family_corpus(int n) {
    std::vector<FamilySpec> specs;
    for (int k = 0; k + 2 <= n; ++k) specs.push_back({FamilyKind::L, n, k});
    for (int t = 1; t + 3 <= n; ++t) specs.push_back({FamilyKind::GammaT, n, t});
    for (int k = 0; 2 * k + 3 <= n; ++k) specs.push_back({FamilyKind::WoodallGamma, n, k});
    for (int k = 1; k < n; ++k) specs.push_back({FamilyKind::Snk, n, k});
    for (int k = 1; n - k >= 2; ++k) specs.push_back({FamilyKind::SnkPlus, n, k});
    if (n >= 2) specs.push_back({FamilyKind::Turan2, n, 0});

    std::vector<NamedGraph> out;
    std::unordered_set<std::string> seen;
    for (const FamilySpec& s : specs) {
        Graph g = s.build();
        if (seen.insert(canonical_form(g)).second) out.push_back({s.to_string(), std::move(g)});
    }
    return out;
}

std::vector<NamedGraph> perturbed_family_corpus(int n) {
    std::vector<NamedGraph> out = family_corpus(n);
    std::unordered_set<std::string> seen;
    for (const NamedGraph& ng : out) seen.insert(canonical_form(ng.graph));
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const bool present = out[i].graph.adjacent(u, v);
                Graph g = present ? out[i].graph.without_edge(u, v) : out[i].graph.with_edge(u, v);
                if (!seen.insert(canonical_form(g)).second) continue;
                out.push_back({out[i].name + (present ? " -" : " +") + std::to_string(u) + "-" + std::to_string(v),
                               std::move(g)});
            }
        }
    }
    return out;
}

}  // namespace cyclespec
