#pragma once

#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

inline constexpr double kDefaultPowerTol = 1e-10;

/// Extremal eigenvalue estimate from power iteration. The reported value is
/// the Rayleigh quotient of the final unit iterate, so it is always a true
/// lower bound on the extremal eigenvalue of the symmetric matrix; the
/// residual ||Mx - value*x|| quantifies how far from an eigenpair it is.
struct SpectralEstimate {
    double value = 0.0;
    double lower = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> eigenvector; // final unit iterate
};

/// Largest eigenvalue of the signless Laplacian Q(G) = D(G) + A(G).
/// Power iteration from the all-ones vector; connected k-regular graphs
/// short-circuit to the exact value 2k.
SpectralEstimate q_radius(const Graph& g, double tol = kDefaultPowerTol);

/// Largest adjacency eigenvalue. Iterates on A(G) + I so that bipartite
/// graphs converge, and reports the shifted Rayleigh quotient minus one;
/// connected k-regular graphs short-circuit to the exact value k.
SpectralEstimate adj_radius(const Graph& g, double tol = kDefaultPowerTol);

/// max_u { d(u) + (1/d(u)) * sum_{v adjacent to u} d(v) }, an upper bound on
/// q(G). Undefined when an isolated vertex is present (throws).
double merris_q_bound(const Graph& g);

enum class MatrixKind { adjacency, signless_laplacian };

/// Full spectrum (sorted descending) by cyclic Jacobi plane rotations, run
/// until the off-diagonal norm is at most 1e-12. Independent of the power
/// iteration path; n <= 12.
std::vector<double> dense_eigen_oracle(const Graph& g, MatrixKind kind);

} // namespace qbound
