#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

struct Counterexample {
    std::string graph6;
    std::string violated;
};

struct Witness {
    std::string graph6;
    std::string note;
};

// Per-worker accumulator. Entries carry the instance index so merged
// results come out in instance order no matter how work was split.
struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t applicable = 0;
    std::vector<std::pair<std::uint64_t, Counterexample>> counterexamples;
    std::vector<std::pair<std::uint64_t, Witness>> witnesses;
    std::vector<std::pair<std::uint64_t, Counterexample>> undecided;
    std::map<std::string, std::uint64_t> counters;

    void merge(Tally&& other);
    void sort();
};

// Worker count for --jobs 0: hardware concurrency, at least 1.
int default_jobs();

// Calls body(i, tally) for i in [0, count) on `jobs` threads, each owning a
// private tally; returns the merged, index-sorted result. The first
// exception thrown by any body is rethrown after all workers stop.
Tally run_indexed(std::uint64_t count, int jobs,
                  const std::function<void(std::uint64_t, Tally&)>& body);

// Buffers graphs produced by a serial generator and checks them in parallel
// batches. Indices are assigned in push order.
class BatchSweep {
public:
    using Check = std::function<void(std::uint64_t, const Graph&, Tally&)>;

    BatchSweep(int jobs, Check check, std::size_t batch = 4096);
    void push(Graph g);
    Tally finish();

private:
    void flush();

    int jobs_;
    Check check_;
    std::size_t batch_;
    std::vector<Graph> pending_;
    std::uint64_t next_index_ = 0;
    Tally total_;
};

// Number of unordered vertex pairs, and the graph whose edges are the set
// bits of `mask` over pairs in lexicographic order (n <= 11).
int pair_count(int n);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

// Every labeled graph on n vertices (n <= 8), in mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// Every labeled graph on n vertices missing at most `max_missing` edges:
// complements with few edges, in order of missing-edge count then
// lexicographic choice of missing pairs.
void for_each_dense_graph(int n, int max_missing, const std::function<void(const Graph&)>& fn);
std::uint64_t dense_graph_count(int n, int max_missing);

// One representative per isomorphism class of graphs on n vertices whose
// every induced subgraph satisfies `keep` (keep must be hereditary; pass a
// predicate returning true for all graphs). Built by vertex augmentation
// with canonical-form dedup; sorted by canonical form.
std::vector<Graph> nonisomorphic_graphs(int n, const std::function<bool(const Graph&)>& keep);

// All family constructions on n vertices over every valid parameter, each
// with a name like "L:10,2", deduplicated up to isomorphism.
struct NamedGraph {
    std::string name;
    Graph graph;
};
std::vector<NamedGraph> family_corpus(int n);

// family_corpus plus every one-edge addition and deletion of each member,
// deduplicated up to isomorphism; perturbations are named "L:10,2 +3-7".
std::vector<NamedGraph> perturbed_family_corpus(int n);

}  // namespace cyclespec
