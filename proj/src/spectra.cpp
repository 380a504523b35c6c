#include "qbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace qbound {

namespace {

int iteration_cap(int n) { return 100 * n + 1000; }

/// y = (A + shift*I + diag_degrees?) x computed straight from the adjacency
/// bitsets; deg is null for the adjacency case.
void matvec(const Graph& g, const std::vector<int>* deg, double shift,
            const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        double acc = shift * x[u];
        if (deg) acc += (*deg)[u] * x[u];
        g.for_each_neighbor(u, [&](int v) { acc += x[v]; });
        y[u] = acc;
    }
}

SpectralEstimate power_iterate(const Graph& g, const std::vector<int>* deg, double shift,
                               double tol) {
    if (tol <= 0) throw std::invalid_argument("power iteration tolerance must be positive");
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("spectral radius needs n >= 1");

    SpectralEstimate est;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    const int cap = iteration_cap(n);

    while (true) {
        matvec(g, deg, shift, x, y);
        ++est.iterations;
        double mu = 0.0;
        for (int i = 0; i < n; ++i) mu += x[i] * y[i];
        double rr = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = y[i] - mu * x[i];
            rr += r * r;
        }
        est.value = mu - shift;
        est.residual = std::sqrt(rr);
        if (est.residual <= tol) {
            est.converged = true;
            break;
        }
        if (est.iterations >= cap) break;
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) break; // x is in the kernel; Rayleigh quotient is already exact
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    est.lower = est.value;
    est.eigenvector = std::move(x);
    return est;
}

/// Exact short-circuit for connected regular graphs, whose Perron vector is
/// the all-ones vector.
SpectralEstimate exact_regular(const Graph& g, double value) {
    SpectralEstimate est;
    est.value = est.lower = value;
    est.residual = 0.0;
    est.iterations = 0;
    est.converged = true;
    est.eigenvector.assign(g.order(), 1.0 / std::sqrt(static_cast<double>(g.order())));
    return est;
}

int regular_degree_if_connected(const Graph& g) {
    const int n = g.order();
    const int d0 = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != d0) return -1;
    return is_connected(g) ? d0 : -1;
}

} // namespace

SpectralEstimate q_radius(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("power iteration tolerance must be positive");
    if (g.order() < 1) throw std::invalid_argument("q_radius needs n >= 1");
    if (const int k = regular_degree_if_connected(g); k >= 0) return exact_regular(g, 2.0 * k);
    std::vector<int> deg(g.order());
    for (int u = 0; u < g.order(); ++u) deg[u] = g.degree(u);
    return power_iterate(g, &deg, 0.0, tol);
}

SpectralEstimate adj_radius(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("power iteration tolerance must be positive");
    if (g.order() < 1) throw std::invalid_argument("adj_radius needs n >= 1");
    if (const int k = regular_degree_if_connected(g); k >= 0) return exact_regular(g, k);
    return power_iterate(g, nullptr, 1.0, tol);
}

double merris_q_bound(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("merris_q_bound needs n >= 1");
    double best = 0.0;
    for (int u = 0; u < n; ++u) {
        const int du = g.degree(u);
        if (du == 0)
            throw std::invalid_argument("merris_q_bound undefined: vertex " + std::to_string(u) +
                                        " is isolated");
        long long neighbor_deg_sum = 0;
        g.for_each_neighbor(u, [&](int v) { neighbor_deg_sum += g.degree(v); });
        const double term = du + static_cast<double>(neighbor_deg_sum) / du;
        if (term > best) best = term;
    }
    return best;
}

std::vector<double> dense_eigen_oracle(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    if (n < 1 || n > 12)
        throw std::invalid_argument("dense_eigen_oracle supports 1 <= n <= 12, got " +
                                    std::to_string(n));
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int u = 0; u < n; ++u) {
        if (kind == MatrixKind::signless_laplacian) at(u, u) = g.degree(u);
        g.for_each_neighbor(u, [&](int v) { at(u, v) = 1.0; });
    }

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    // Cyclic Jacobi sweeps; quadratic convergence makes 1e-12 cheap at n <= 12.
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-12; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
    }

    std::vector<double> eig;
    eig.reserve(n);
    for (int i = 0; i < n; ++i) eig.push_back(at(i, i));
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

} // namespace qbound
