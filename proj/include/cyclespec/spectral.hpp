#pragma once

#include <cstdint>
#include <stdexcept>

#include "cyclespec/graph.hpp"

namespace cyclespec {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kMinTol = 1e-13;
inline constexpr std::uint64_t kIterationCap = 1'000'000;

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Radius {
    double value = 0.0;
    std::uint64_t iterations = 0;
};

// Largest adjacency eigenvalue. Power iteration on (A + I) per connected
// component from the all-ones vector; stops when successive Rayleigh
// quotients differ by < tol/4 and the residual max|Ax - lx| < tol*max(1, l).
// Graphs with no edges (including order 0 and 1) have radius 0.
Radius spectral_radius_detail(const Graph& g, double tol = kDefaultTol);
Radius q_radius_detail(const Graph& g, double tol = kDefaultTol);

inline double spectral_radius(const Graph& g, double tol = kDefaultTol) {
    return spectral_radius_detail(g, tol).value;
}
// Largest eigenvalue of the signless Laplacian Q = A + D.
inline double q_radius(const Graph& g, double tol = kDefaultTol) {
    return q_radius_detail(g, tol).value;
}

struct HongBound {
    double value = 0.0;
    bool valid = false;  // min degree >= 1
};

// sqrt(2m - n + 1); an upper bound on the spectral radius when valid.
HongBound hong_bound(const Graph& g);

// 2m/(n-1) + n - 2, an upper bound on q. Throws GraphError for n < 2.
double das_bound(const Graph& g);

struct VertexDeletionSides {
    // rho^2(G - v) >= rho^2(G) - 2 d(v) + 1, claimed when min degree >= 1.
    double deletion_lhs = 0.0;
    double deletion_rhs = 0.0;
    bool deletion_applies = false;
    // rho^2(G) <= rho^2(G - v) + 2 d(v), claimed unconditionally.
    double growth_lhs = 0.0;
    double growth_rhs = 0.0;
};

VertexDeletionSides sun_das_check(const Graph& g, int v, double tol = kDefaultTol);

struct SpectralSummary {
    double rho = 0.0;
    double q = 0.0;
    double hong = 0.0;
    bool hong_valid = false;
    double das = 0.0;
    bool das_defined = false;
    double tol = kDefaultTol;
    std::uint64_t iterations = 0;
};

SpectralSummary spectral_summary(const Graph& g, double tol = kDefaultTol);

}  // namespace cyclespec
