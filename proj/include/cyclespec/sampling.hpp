#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

using Rng = std::mt19937_64;

// Independent stream per (seed, index) so parallel sweeps draw the same
// instances regardless of how work is split.
Rng make_rng(std::uint64_t seed, std::uint64_t index);

Graph random_gnp(Rng& rng, int n, double p);
// Uniform among graphs with exactly m edges.
Graph random_gnm(Rng& rng, int n, int m);
std::vector<int> random_permutation(Rng& rng, int n);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
double uniform_real(Rng& rng, double lo, double hi);

}  // namespace cyclespec
