// spectral.hpp — adjacency spectral radius and bound comparison.
#pragma once

#include <stdexcept>

#include "specgraph/graph.hpp"

namespace specgraph {

struct SpectralOptions {
    double tol = 1e-10;             // target accuracy of the Rayleigh quotient
    long long max_iterations = 0;   // 0 selects the default cap 100*n^2
};

struct SpectralEstimate {
    double value = 0.0;       // estimated spectral radius, in [0, n-1]
    double residual = 0.0;    // |A x - value x|_inf for the returned unit vector
    long long iterations = 0;
    double shift = 0.0;       // spectral shift used internally (A + shift*I)
};

/// Power iteration hit the iteration cap; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, SpectralEstimate best)
        : std::runtime_error(what), best_(best) {}
    const SpectralEstimate& best_estimate() const { return best_; }

private:
    SpectralEstimate best_;
};

/// Largest adjacency eigenvalue via power iteration on A + n*I (the shift
/// makes the matrix positive definite, killing the bipartite +-mu
/// oscillation). Deterministic: the start vector is all-ones with a fixed
/// index-proportional perturbation. Requires n >= 1 and tol > 0.
SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& options = {});
SpectralEstimate spectral_radius(const Graph& g, double tol);

/// min over edges uv of sqrt(d(u) d(v)). Requires a non-empty edge set.
double min_edge_geometric_degree(const Graph& g);

enum class BoundVerdict { Below, Equal, Above };

struct BoundComparison {
    BoundVerdict verdict;
    double mu_squared;
    long long radicand;
};

/// Compare value^2 against an integer radicand: within band of it -> Equal,
/// below radicand - band -> Below, else Above. The band is the honest
/// comparison scale because every theorem bound has an integer radicand.
BoundComparison compare_to_bound(const SpectralEstimate& est, long long radicand,
                                 double band = 1e-6);

}  // namespace specgraph
