#include "cyclespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace cyclespec {

namespace {

void check_tol(double tol) {
    if (!(tol >= kMinTol)) throw SpectralError("tolerance below 1e-13");
}

// Perron root of A (or Q when `signless`) restricted to one component.
Radius component_radius(const Graph& g, const VertexSet& comp, bool signless, double tol) {
    if (comp.size() < 2) return {};
    const int n = g.order();
    std::vector<int> verts;
    comp.for_each([&](int v) { verts.push_back(v); });
    std::vector<double> x(static_cast<std::size_t>(n), 0.0), y(x.size(), 0.0);
    std::vector<double> diag(x.size(), 0.0);
    for (int v : verts) {
        x[v] = 1.0;
        if (signless) diag[v] = g.degree(v);
    }

    double previous = 0.0;
    for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
        double xy = 0.0, xx = 0.0;
        for (int v : verts) {
            double s = diag[v] * x[v];
            g.neighbors(v).for_each([&](int w) { s += x[w]; });
            y[v] = s;
            xy += x[v] * s;
            xx += x[v] * x[v];
        }
        const double rq = xy / xx;
        double residual = 0.0, top = 0.0;
        for (int v : verts) {
            residual = std::max(residual, std::abs(y[v] - rq * x[v]));
            top = std::max(top, y[v] + x[v]);
        }
        if (it > 1 && std::abs(rq - previous) < tol / 4 && residual < tol * std::max(1.0, rq))
            return {rq, it};
        previous = rq;
        for (int v : verts) x[v] = (y[v] + x[v]) / top;
    }
    throw SpectralError("power iteration did not converge within " +
                        std::to_string(kIterationCap) + " iterations");
}

Radius radius(const Graph& g, bool signless, double tol) {
    check_tol(tol);
    Radius best;
    for (const VertexSet& comp : components(g).blocks) {
        const Radius r = component_radius(g, comp, signless, tol);
        best.iterations += r.iterations;
        best.value = std::max(best.value, r.value);
    }
    return best;
}

}  // namespace

Radius spectral_radius_detail(const Graph& g, double tol) { return radius(g, false, tol); }

Radius q_radius_detail(const Graph& g, double tol) { return radius(g, true, tol); }

HongBound hong_bound(const Graph& g) {
    const double arg = 2.0 * g.edge_count() - g.order() + 1.0;
    return {std::sqrt(std::max(0.0, arg)), g.order() > 0 && min_degree(g) >= 1};
}

double das_bound(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw GraphError("das_bound needs at least 2 vertices");
    return 2.0 * g.edge_count() / (n - 1) + n - 2;
}

VertexDeletionSides sun_das_check(const Graph& g, int v, double tol) {
    const int d = g.degree(v);
    const double full = spectral_radius(g, tol);
    const double reduced = spectral_radius(delete_vertex(g, v).graph, tol);
    VertexDeletionSides s;
    s.deletion_lhs = reduced * reduced;
    s.deletion_rhs = full * full - 2.0 * d + 1.0;
    s.deletion_applies = min_degree(g) >= 1;
    s.growth_lhs = full * full;
    s.growth_rhs = reduced * reduced + 2.0 * d;
    return s;
}

SpectralSummary spectral_summary(const Graph& g, double tol) {
    SpectralSummary s;
    const Radius rho = spectral_radius_detail(g, tol);
    const Radius q = q_radius_detail(g, tol);
    s.rho = rho.value;
    s.q = q.value;
    s.iterations = rho.iterations + q.iterations;
    const HongBound h = hong_bound(g);
    s.hong = h.value;
    s.hong_valid = h.valid;
    if (g.order() >= 2) {
        s.das = das_bound(g);
        s.das_defined = true;
    }
    s.tol = tol;
    return s;
}

}  // namespace cyclespec
